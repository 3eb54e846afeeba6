"""dmtool command line.

    dmtool check delta-matroid|vf-safe|eulerian|bipartite FILE [--generalized]
    dmtool apply "<opword>" FILE
    dmtool penrose FILE [--method direct|recursive|fundamental] [--basis a,b,..]
    dmtool p1 FILE [--method direct|recursive]
    dmtool transition FILE -a A -b B -c C [--method direct|recursive]
    dmtool tutte FILE
    dmtool tripartition FILE [--method coloop|classical|fundamental] [--basis ..]
    dmtool bicycle FILE [--relative a,b,..]
    dmtool eval FILE

Exit status: 0 success (or predicate true), 1 validation failure (or
predicate false), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from fractions import Fraction

from . import bicycle, poly
from .errors import DmtoolError
from .formats import Loaded, load, write_set_system
from .matroid import Matroid
from .setsys import apply_sequence, delta_matroid_violation, vf_safety_witness

_OP_KINDS = {"*": "twist", "+": "loopc", "~": "dualpivot", "\\": "delete"}
_OP_RE = re.compile(r"\s*([*+~\\])\s*\{([^{}]*)\}")


class UsageError(Exception):
    pass


def parse_opword(word: str, ground) -> list[tuple[str, tuple]]:
    """Parse e.g. ``*{1 2} +{3} \\{4}`` into (kind, subset) pairs, left to right."""
    ops = []
    pos = 0
    word = word.strip()
    while pos < len(word):
        m = _OP_RE.match(word, pos)
        if not m:
            raise UsageError(f"cannot parse operation word at {word[pos:]!r}")
        items = tuple(t for t in re.split(r"[\s,]+", m.group(2)) if t)
        unknown = [t for t in items if t not in ground]
        if unknown:
            raise UsageError(f"operation word uses undeclared element(s) {' '.join(unknown)}")
        ops.append((_OP_KINDS[m.group(1)], items))
        pos = m.end()
        ground = [g for g in ground if not (ops[-1][0] == "delete" and g in items)]
    return ops


def _subset_arg(text, ground) -> tuple:
    items = tuple(t for t in re.split(r"[\s,]+", text) if t)
    unknown = [t for t in items if t not in ground]
    if unknown:
        raise UsageError(f"undeclared element(s) {' '.join(unknown)}")
    return items


def _fmt_set(s, ground) -> str:
    return "{" + " ".join(str(g) for g in ground if g in s) + "}"


def _matroid(obj: Loaded) -> Matroid:
    if obj.matroid is not None:
        return obj.matroid
    return Matroid(obj.system)


def _poly_result(p) -> tuple[str, dict]:
    return f"{p}\ncoeffs: {p.coeff_string()}", {"poly": str(p), "coeffs": [str(c) for c in p.coeffs]}


# --------------------------------------------------------------------------
# subcommands: each returns (text, json-able result, exit status)
# --------------------------------------------------------------------------

def cmd_check(args, obj: Loaded):
    s = obj.system
    what = args.property
    detail = ""
    if what == "delta-matroid":
        v = delta_matroid_violation(s)
        ok = v is None
        if not ok:
            x, y, u = v
            if x is None:
                detail = "empty family"
            else:
                detail = f"exchange fails for {_fmt_set(x, s.ground)}, {_fmt_set(y, s.ground)} at {u}"
    elif what == "vf-safe":
        w = vf_safety_witness(s)
        ok = w is None
        if not ok:
            detail = f"M +{_fmt_set(w[0], s.ground)} dual-pivot {_fmt_set(w[1], s.ground)} is not a delta-matroid"
    else:
        if args.generalized:
            fn = bicycle.is_eulerian_gen if what == "eulerian" else bicycle.is_bipartite_gen
            ok = fn(s)
        else:
            m = _matroid(obj)
            ok = bicycle.is_eulerian(m) if what == "eulerian" else bicycle.is_bipartite(m)
    text = "true" if ok else "false"
    if detail:
        text += f"  ({detail})"
    return text, {"property": what, "value": ok, "detail": detail}, 0 if ok else 1


def cmd_apply(args, obj: Loaded):
    ops = parse_opword(args.opword, obj.system.ground)
    out = apply_sequence(obj.system, ops)
    return write_set_system(out).rstrip("\n"), {
        "elements": list(out.ground),
        "sets": [list(out.ordered(z)) for z in out.family],
    }, 0


def cmd_penrose(args, obj: Loaded):
    s = obj.system
    if args.method == "direct":
        p = poly.penrose_direct(s)
    elif args.method == "recursive":
        p = poly.penrose_recursive(s)
    else:
        m = _matroid(obj)
        basis = _subset_arg(args.basis, s.ground) if args.basis else m.system.ordered(m.system.family[0])
        p = poly.penrose_fundamental(m, basis)
    text, res = _poly_result(p)
    return text, res, 0


def cmd_p1(args, obj: Loaded):
    if obj.graph is not None:
        p = poly.p1_graph_recursive(obj.graph) if args.method == "recursive" else poly.p1_graph_direct(obj.graph)
    elif args.method == "recursive":
        p = poly.transition_recursive(obj.system, 1, -1)
    else:
        p = poly.p1(obj.system)
    text, res = _poly_result(p)
    return text, res, 0


def cmd_transition(args, obj: Loaded):
    a, b, c = (Fraction(x) for x in (args.a, args.b, args.c))
    if args.method == "recursive":
        if c != 0:
            raise UsageError("the recursive method needs -c 0")
        p = poly.transition_recursive(obj.system, a, b)
    else:
        p = poly.transition_direct(obj.system, (a, b, c))
    text, res = _poly_result(p)
    return text, res, 0


def cmd_tutte(args, obj: Loaded):
    t = poly.tutte(_matroid(obj))
    terms = {f"{i},{j}": c for (i, j), c in sorted(t.terms.items())}
    return str(t), {"poly": str(t), "terms": terms}, 0


def cmd_tripartition(args, obj: Loaded):
    ground = obj.system.ground
    if args.method == "coloop":
        t = bicycle.tripartition(obj.system)
    else:
        m = _matroid(obj)
        if args.method == "classical":
            t = bicycle.tripartition_classical(m)
        else:
            basis = _subset_arg(args.basis, ground) if args.basis else m.system.ordered(m.system.family[0])
            t = bicycle.tripartition_fundamental(m, basis)
    res = {k: [g for g in ground if g in getattr(t, k)] for k in "PQR"}
    return t.format(ground), res, 0


def cmd_bicycle(args, obj: Loaded):
    s = obj.system
    y = _subset_arg(args.relative, s.ground) if args.relative is not None else s.ground
    dim = bicycle.bicycle_dimension(s, y)
    bm = bicycle.bicycle_matroid(s, y)
    bases = [bm.system.ordered(z) for z in bm.system.family]
    text = f"dimension: {dim}  bases: " + ", ".join("{" + " ".join(map(str, b)) + "}" for b in bases)
    return text, {"dimension": dim, "bases": [list(b) for b in bases]}, 0


def cmd_eval(args, obj: Loaded):
    report = poly.penrose_evaluations(obj.system)
    ok = all(e.passed for e in report if e.applicable)
    return "\n".join(e.line() for e in report), [e.as_dict() for e in report], 0 if ok else 1


COMMANDS = {
    "check": cmd_check,
    "apply": cmd_apply,
    "penrose": cmd_penrose,
    "p1": cmd_p1,
    "transition": cmd_transition,
    "tutte": cmd_tutte,
    "tripartition": cmd_tripartition,
    "bicycle": cmd_bicycle,
    "eval": cmd_eval,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dmtool", description="Delta-matroid and Penrose polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit a single JSON object")
        return p

    p = add("check", "test a property of the input")
    p.add_argument("property", choices=["delta-matroid", "vf-safe", "eulerian", "bipartite"])
    p.add_argument("file")
    p.add_argument("--generalized", action="store_true", help="use the loop-complementation forms")

    p = add("apply", "apply an operation word and print the resulting set system")
    p.add_argument("opword", help='e.g. "*{1 2} +{3} ~{4} \\{5}"')
    p.add_argument("file")

    p = add("penrose", "Penrose polynomial")
    p.add_argument("file")
    p.add_argument("--method", choices=["direct", "recursive", "fundamental"], default="direct")
    p.add_argument("--basis", help="basis for the fundamental-graph method (comma separated)")

    p = add("p1", "the p1 polynomial")
    p.add_argument("file")
    p.add_argument("--method", choices=["direct", "recursive"], default="direct")

    p = add("transition", "weighted transition polynomial")
    p.add_argument("file")
    p.add_argument("-a", default="1")
    p.add_argument("-b", default="1")
    p.add_argument("-c", default="0")
    p.add_argument("--method", choices=["direct", "recursive"], default="direct")

    p = add("tutte", "Tutte polynomial of a matroid")
    p.add_argument("file")

    p = add("tripartition", "principal tripartition")
    p.add_argument("file")
    p.add_argument("--method", choices=["coloop", "classical", "fundamental"], default="coloop")
    p.add_argument("--basis")

    p = add("bicycle", "bicycle dimension and bicycle matroid")
    p.add_argument("file")
    p.add_argument("--relative", help="subset Y (comma separated); default the whole ground set")

    p = add("eval", "Penrose evaluation identities")
    p.add_argument("file")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    as_json = args.json
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            obj = load(args.file)
            text, result, status = COMMANDS[args.command](args, obj)
        except (UsageError, OSError) as e:
            return _emit_error(as_json, str(e), 2, caught)
        except DmtoolError as e:
            return _emit_error(as_json, str(e), 1, caught)
    msgs = [str(w.message) for w in caught]
    if as_json:
        print(json.dumps({"result": result, "warnings": msgs}))
    else:
        for m in msgs:
            print(f"warning: {m}", file=sys.stderr)
        print(text)
    return status


def _emit_error(as_json, message, status, caught) -> int:
    msgs = [str(w.message) for w in caught]
    if as_json:
        print(json.dumps({"result": None, "error": message, "warnings": msgs}))
    else:
        for m in msgs:
            print(f"warning: {m}", file=sys.stderr)
        print(f"dmtool: error: {message}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
