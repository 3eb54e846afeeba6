import json

import pytest

from dmtool.cli import UsageError, main, parse_opword
from dmtool.errors import ParseError
from dmtool.field import Field
from dmtool.formats import (
    load,
    parse_graph,
    parse_matrix,
    parse_matroid,
    parse_set_system,
    write_graph,
    write_matrix,
    write_matroid,
    write_set_system,
)
from dmtool.generators import random_binary_matroid, random_graph, random_inv_symmetric, random_set_system
from dmtool.matroid import fano

SIX_G = """# six-edge sample graph with one loop
vertices a b c d
edge 1 a a
edge 2 a c
edge 3 b a
edge 4 c b
edge 5 c d
edge 6 d c
"""

SIX_MAT = """elements 1 2 3 4 5 6
basis 2 3 5
basis 2 3 6
basis 2 4 5
basis 2 4 6
basis 3 4 5
basis 3 4 6
"""


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["six.g"] = tmp_path / "six.g"
    paths["six.g"].write_text(SIX_G)
    paths["six.mat"] = tmp_path / "six.mat"
    paths["six.mat"].write_text(SIX_MAT)
    paths["fano.mat"] = tmp_path / "fano.mat"
    paths["fano.mat"].write_text(write_matroid(fano()))
    paths["u26.ss"] = tmp_path / "u26.ss"
    paths["u26.ss"].write_text("elements 1 2 3 4 5 6\n" + "".join(
        f"set {i} {j}\n" for i in range(1, 7) for j in range(i + 1, 7)))
    paths["pair.ss"] = tmp_path / "pair.ss"
    paths["pair.ss"].write_text("elements 1 2\nset -\nset 1 2\n")
    paths["bad.ss"] = tmp_path / "bad.ss"
    paths["bad.ss"].write_text("elements 1 2\nset 1 3\n")
    paths["tri.gr"] = tmp_path / "tri.gr"
    paths["tri.gr"].write_text("vertices u v w\nedge u v\nedge v w\nedge u w\nloop u\n")
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_penrose_fano(files, capsys):
    code, out, _ = run(capsys, "penrose", files["fano.mat"])
    assert code == 0
    assert out.splitlines() == ["y^4 - 8y^3 + 35y^2 - 56y + 28", "coeffs: 28 -56 35 -8 1"]


def test_penrose_methods_agree(files, capsys):
    outs = set()
    for method in ("direct", "recursive", "fundamental"):
        code, out, _ = run(capsys, "penrose", files["six.mat"], "--method", method)
        assert code == 0
        outs.add(out)
    code, out, _ = run(capsys, "penrose", files["six.g"], "--method", "fundamental", "--basis", "2,4,6")
    outs.add(out)
    assert len(outs) == 1


def test_tripartition_and_bicycle(files, capsys):
    for f in ("six.mat", "six.g"):
        for method in ("coloop", "classical", "fundamental"):
            code, out, _ = run(capsys, "tripartition", files[f], "--method", method)
            assert (code, out) == (0, "P: 1 2 3 4  Q: -  R: 5 6")
    code, out, _ = run(capsys, "bicycle", files["six.mat"])
    assert (code, out) == (0, "dimension: 1  bases: {1 2 3 4 5}, {1 2 3 4 6}")
    code, out, _ = run(capsys, "bicycle", files["six.mat"], "--relative", "")
    # relative to the empty set: d of M*V and the bases of M itself
    assert out.startswith("dimension: 3  bases: {2 3 5}")


def test_check_exit_codes(files, capsys):
    assert run(capsys, "check", "delta-matroid", files["pair.ss"])[:2] == (0, "true")
    assert run(capsys, "check", "vf-safe", files["fano.mat"])[:2] == (0, "true")
    code, out, _ = run(capsys, "check", "vf-safe", files["u26.ss"])
    assert code == 1 and out.startswith("false")
    assert run(capsys, "check", "bipartite", files["six.mat"])[0] == 1
    # every vertex of the six-edge sample graph has even degree
    assert run(capsys, "check", "eulerian", files["six.mat"], "--generalized")[:2] == (0, "true")
    assert run(capsys, "check", "eulerian", files["six.g"])[:2] == (0, "true")


def test_tripartition_u26_is_validation_failure(files, capsys):
    code, _, err = run(capsys, "tripartition", files["u26.ss"])
    assert code == 1 and "vf-safe" in err


def test_apply(files, capsys):
    code, out, _ = run(capsys, "apply", "+{1}", files["pair.ss"])
    assert code == 0
    assert parse_set_system(out).members() == [frozenset(), frozenset("1"), frozenset({"1", "2"})]
    code, out, _ = run(capsys, "apply", "*{1,2} \\{2}", files["pair.ss"])
    assert parse_set_system(out).members() == [frozenset()]
    assert run(capsys, "apply", "*{9}", files["pair.ss"])[0] == 2
    assert run(capsys, "apply", "?{1}", files["pair.ss"])[0] == 2


def test_parse_opword():
    assert parse_opword("*{1 2} +{3} ~{1} \\{2}", ("1", "2", "3")) == [
        ("twist", ("1", "2")), ("loopc", ("3",)), ("dualpivot", ("1",)), ("delete", ("2",))]
    with pytest.raises(UsageError):
        parse_opword("*{1} +{1}", ("2",))
    with pytest.raises(UsageError):
        parse_opword("\\{1} *{1}", ("1", "2"))


def test_p1_transition_tutte_eval(files, capsys):
    code, out, _ = run(capsys, "p1", files["tri.gr"], "--method", "recursive")
    code2, out2, _ = run(capsys, "p1", files["tri.gr"])
    assert code == code2 == 0 and out == out2
    code, out, _ = run(capsys, "transition", files["fano.mat"], "-a", "0", "-b", "1", "-c", "-1")
    assert out.splitlines()[0] == "y^4 - 8y^3 + 35y^2 - 56y + 28"
    code, out, _ = run(capsys, "transition", files["fano.mat"], "-a", "1", "-b", "-1", "--method", "recursive")
    assert out.splitlines()[0] == "-y^4 + 8y^3 - 35y^2 + 56y - 28"
    assert run(capsys, "transition", files["fano.mat"], "-c", "1", "--method", "recursive")[0] == 2
    code, out, _ = run(capsys, "tutte", files["six.mat"])
    assert code == 0 and "x" in out
    code, out, _ = run(capsys, "eval", files["fano.mat"])
    assert code == 0 and "FAIL" not in out


def test_json_output(files, capsys):
    code, out, _ = run(capsys, "penrose", files["fano.mat"], "--json")
    data = json.loads(out)
    assert code == 0 and set(data) == {"result", "warnings"}
    assert data["result"]["coeffs"] == ["28", "-56", "35", "-8", "1"]
    code, out, _ = run(capsys, "tripartition", files["six.mat"], "--json")
    assert json.loads(out)["result"] == {"P": ["1", "2", "3", "4"], "Q": [], "R": ["5", "6"]}
    code, out, _ = run(capsys, "penrose", files["bad.ss"], "--json")
    data = json.loads(out)
    assert code == 1 and data["result"] is None and "bad.ss:2:" in data["error"]


def test_errors(files, capsys):
    code, _, err = run(capsys, "penrose", files["bad.ss"])
    assert code == 1 and "bad.ss:2:" in err
    assert run(capsys, "penrose", "/nonexistent/file.ss")[0] == 2
    assert run(capsys, "frobnicate", files["pair.ss"])[0] == 2
    assert run(capsys)[0] == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as e:
        parse_matrix("field gf2\nelements a b\nrow a 0 1\nrow b 1 w\n")
    assert e.value.line == 4
    with pytest.raises(ParseError):
        parse_set_system("set 1\n")
    with pytest.raises(ParseError):
        parse_matroid("elements 1 2 3\nbasis 1\nbasis 2 3\n")
    with pytest.raises(ParseError):
        parse_graph("vertices a b\nedge a a\n")
    with pytest.raises(ParseError):
        parse_set_system("elements 1\nbogus 1\n")
    with pytest.raises(ParseError):
        load(__file__)


def test_round_trips(tmp_path):
    for seed in range(10):
        s = random_set_system(seed, 5)
        assert parse_set_system(write_set_system(s)) == s.relabel(tuple(map(str, s.ground)))
        a = random_inv_symmetric(seed, 4)
        b = parse_matrix(write_matrix(a))
        assert b.field is Field.GF4 and b.entries == a.entries
        g = random_graph(seed, 5)
        assert parse_graph(write_graph(g)).matrix.entries == g.matrix.entries
        m = random_binary_matroid(seed, 6)
        back = parse_matroid(write_matroid(m))
        assert back.system == m.system.relabel(tuple(map(str, m.ground)))
        assert back.representation.entries == m.representation.entries
    p = tmp_path / "m.m4"
    p.write_text(write_matrix(random_inv_symmetric(1, 3)))
    assert load(p).kind == "matrix"
