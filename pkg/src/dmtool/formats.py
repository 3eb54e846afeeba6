"""
Plain-text fixture files.

All formats are line based, whitespace separated, with ``#`` comments.
Labels are kept as strings in file order.

    .m2 / .m4   field gf2|gf4 ; elements a b c ; row a 0 1 w ...
    .ss         elements a b c ; set a b ; set -        (empty member)
    .mat        elements ... ; basis ... ; optional field + rep rows
    .g          vertices ... ; edge <label> <u> <v>     (graphic matroid)
    .gr         vertices ... ; edge <u> <v> ; loop <u>  (graph)
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import DmtoolError, ParseError
from .field import Field, format_token, parse_token
from .graph import Graph
from .matrix import RectMatrix, SquareMatrix, principal_set_system
from .matroid import Matroid, graphic
from .setsys import SetSystem

EXTENSIONS = (".m2", ".m4", ".ss", ".mat", ".g", ".gr")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if line:
            yield no, line[0], line[1:]


def _fail(msg, no, path):
    raise ParseError(msg, line=no, path=path)


def _elements(seen, no, path, args, key="elements"):
    if seen is not None:
        _fail(f"duplicate '{key}' line", no, path)
    if len(set(args)) != len(args):
        _fail("element labels must be distinct", no, path)
    return tuple(args)


def _subset(args, ground, no, path):
    if args == ["-"]:
        return ()
    unknown = [a for a in args if a not in ground]
    if unknown:
        _fail(f"undeclared element(s) {' '.join(unknown)}", no, path)
    if len(set(args)) != len(args):
        _fail("repeated element in a set", no, path)
    return tuple(args)


def _field(args, no, path) -> Field:
    if len(args) != 1 or args[0] not in ("gf2", "gf4"):
        _fail("expected 'field gf2' or 'field gf4'", no, path)
    return Field.GF2 if args[0] == "gf2" else Field.GF4


def _tokens(args, field, no, path):
    try:
        codes = [parse_token(t) for t in args]
    except DmtoolError as e:
        _fail(str(e), no, path)
    if field is Field.GF2 and any(c > 1 for c in codes):
        _fail("w and W are not elements of gf2", no, path)
    return codes


def parse_matrix(text: str, path=None) -> SquareMatrix:
    field = ground = None
    rows = {}
    for no, key, args in _lines(text):
        if key == "field":
            field = _field(args, no, path)
        elif key == "elements":
            ground = _elements(ground, no, path, args)
        elif key == "row":
            if field is None or ground is None:
                _fail("'row' before 'field' and 'elements'", no, path)
            if not args or args[0] not in ground:
                _fail("row needs a declared label", no, path)
            if args[0] in rows:
                _fail(f"duplicate row {args[0]}", no, path)
            if len(args) - 1 != len(ground):
                _fail(f"row has {len(args) - 1} entries, expected {len(ground)}", no, path)
            rows[args[0]] = _tokens(args[1:], field, no, path)
        else:
            _fail(f"unknown keyword {key!r}", no, path)
    if field is None or ground is None:
        _fail("missing 'field' or 'elements' line", None, path)
    missing = [g for g in ground if g not in rows]
    if missing:
        _fail(f"missing rows for {' '.join(missing)}", None, path)
    return SquareMatrix(field, ground, [rows[g] for g in ground])


def write_matrix(a: SquareMatrix) -> str:
    out = [f"field {a.field}", "elements " + " ".join(map(str, a.ground))]
    for g, r in zip(a.ground, a.entries):
        out.append(f"row {g} " + " ".join(format_token(x) for x in r))
    return "\n".join(out) + "\n"


def parse_set_system(text: str, path=None, member_key: str = "set") -> SetSystem:
    ground = None
    sets = []
    for no, key, args in _lines(text):
        if key == "elements":
            ground = _elements(ground, no, path, args)
        elif key == member_key:
            if ground is None:
                _fail(f"'{member_key}' before 'elements'", no, path)
            if not args:
                _fail(f"empty '{member_key}' line; write '{member_key} -' for the empty set", no, path)
            sets.append(_subset(args, ground, no, path))
        else:
            _fail(f"unknown keyword {key!r}", no, path)
    if ground is None:
        _fail("missing 'elements' line", None, path)
    return SetSystem(ground, sets)


def write_set_system(s: SetSystem, member_key: str = "set") -> str:
    out = ["elements " + " ".join(map(str, s.ground))]
    for z in s.family:
        items = s.ordered(z)
        out.append(f"{member_key} " + (" ".join(map(str, items)) if items else "-"))
    return "\n".join(out) + "\n"


def parse_matroid(text: str, path=None) -> Matroid:
    ground = field = None
    bases = []
    rep_rows = []
    for no, key, args in _lines(text):
        if key == "elements":
            ground = _elements(ground, no, path, args)
        elif key == "basis":
            if ground is None:
                _fail("'basis' before 'elements'", no, path)
            bases.append(_subset(args, ground, no, path))
        elif key == "field":
            field = _field(args, no, path)
        elif key == "rep":
            if field is None or ground is None:
                _fail("'rep' before 'field' and 'elements'", no, path)
            if len(args) != len(ground):
                _fail(f"rep row has {len(args)} entries, expected {len(ground)}", no, path)
            rep_rows.append(_tokens(args, field, no, path))
        else:
            _fail(f"unknown keyword {key!r}", no, path)
    if ground is None:
        _fail("missing 'elements' line", None, path)
    system = SetSystem(ground, bases)
    try:
        m = Matroid(system)
        if rep_rows:
            rep = RectMatrix(field, [f"r{i}" for i in range(len(rep_rows))], ground, rep_rows)
            m = m.with_representation(rep)
    except DmtoolError as e:
        raise ParseError(str(e), path=path) from None
    return m


def write_matroid(m: Matroid) -> str:
    text = write_set_system(m.system, "basis")
    rep = m.representation
    if rep is not None:
        text += f"field {rep.field}\n"
        for r in rep.entries:
            text += "rep " + " ".join(format_token(x) for x in r) + "\n"
    return text


def parse_multigraph(text: str, path=None) -> Matroid:
    vertices = None
    edges = []
    for no, key, args in _lines(text):
        if key == "vertices":
            vertices = _elements(vertices, no, path, args, "vertices")
        elif key == "edge":
            if vertices is None:
                _fail("'edge' before 'vertices'", no, path)
            if len(args) != 3:
                _fail("expected 'edge <label> <u> <v>'", no, path)
            lab, u, v = args
            if u not in vertices or v not in vertices:
                _fail("edge uses an undeclared vertex", no, path)
            if any(e[0] == lab for e in edges):
                _fail(f"duplicate edge label {lab}", no, path)
            edges.append((lab, u, v))
        else:
            _fail(f"unknown keyword {key!r}", no, path)
    if vertices is None:
        _fail("missing 'vertices' line", None, path)
    return graphic(vertices, edges)


def parse_graph(text: str, path=None) -> Graph:
    vertices = None
    edges, loops = [], []
    for no, key, args in _lines(text):
        if key == "vertices":
            vertices = _elements(vertices, no, path, args, "vertices")
        elif key in ("edge", "loop"):
            if vertices is None:
                _fail(f"'{key}' before 'vertices'", no, path)
            want = 2 if key == "edge" else 1
            if len(args) != want or any(a not in vertices for a in args):
                _fail(f"'{key}' needs {want} declared vertex label(s)", no, path)
            if key == "edge" and args[0] == args[1]:
                _fail("use 'loop <u>' for a loop", no, path)
            (edges if key == "edge" else loops).append(tuple(args) if key == "edge" else args[0])
        else:
            _fail(f"unknown keyword {key!r}", no, path)
    if vertices is None:
        _fail("missing 'vertices' line", None, path)
    return Graph.from_edges(vertices, edges, loops)


def write_graph(g: Graph) -> str:
    out = ["vertices " + " ".join(map(str, g.vertices))]
    out += [f"edge {u} {v}" for u, v in g.edges()]
    out += [f"loop {u}" for u in g.loops()]
    return "\n".join(out) + "\n"


@dataclass
class Loaded:
    """A parsed fixture: its set system plus whatever richer object the file described."""

    kind: str
    system: SetSystem
    matroid: Matroid | None = None
    graph: Graph | None = None
    matrix: SquareMatrix | None = None


def load(path) -> Loaded:
    path = Path(path)
    text = path.read_text()
    ext = path.suffix
    if ext in (".m2", ".m4"):
        a = parse_matrix(text, path)
        return Loaded("matrix", principal_set_system(a), matrix=a)
    if ext == ".ss":
        return Loaded("setsys", parse_set_system(text, path))
    if ext == ".mat":
        m = parse_matroid(text, path)
        return Loaded("matroid", m.system, matroid=m)
    if ext == ".g":
        m = parse_multigraph(text, path)
        return Loaded("matroid", m.system, matroid=m)
    if ext == ".gr":
        g = parse_graph(text, path)
        return Loaded("graph", principal_set_system(g.matrix), graph=g)
    raise ParseError(f"unknown file type {ext!r}; expected one of {' '.join(EXTENSIONS)}", path=path)
