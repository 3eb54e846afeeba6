from fractions import Fraction
from itertools import combinations
import random

import pytest

from dmtool.errors import CapacityError, NotVfSafeError, RepresentationError, SubsetError, ValidationError
from dmtool.generators import (
    random_binary_matroid,
    random_delta_matroid,
    random_even_delta_matroid,
    random_graph,
    random_inv_symmetric,
    random_set_system,
)
from dmtool.graph import Graph, graph_delta_matroid, graph_from_small_sets
from dmtool.matrix import principal_set_system
from dmtool.matroid import Matroid, fano, uniform
from dmtool.poly import (
    ONE,
    Y,
    Poly,
    Poly2,
    TransitionWeights,
    interlace_nullity_sum,
    odd_fixed_loop_complement,
    p1,
    p1_graph_direct,
    p1_graph_recursive,
    penrose_direct,
    penrose_evaluations,
    penrose_fundamental,
    penrose_recursive,
    transition_direct,
    transition_recursive,
    tutte,
    verify_transition_tutte,
)
from dmtool.setsys import SetSystem

from conftest import binary_fixtures, sets

DIAMOND_P = Poly([8, -12, 4])  # 4(1-y)(2-y)


def subsets(ground):
    for k in range(len(ground) + 1):
        yield from combinations(ground, k)


# --------------------------------------------------------------------------
# Poly
# --------------------------------------------------------------------------

def test_poly_arithmetic_and_format():
    p = (ONE - Y) * (Poly([2]) - Y) * 4
    assert p == DIAMOND_P
    assert str(p) == "4y^2 - 12y + 8"
    assert p.coeff_string() == "8 -12 4"
    assert p(2) == 0 and p(-2) == 48
    assert Poly([]).degree == -1 and Poly([0, 0]).is_zero()
    assert str(Poly([])) == "0"
    assert str(Poly([-28, 56, -35, 8, -1])) == "-y^4 + 8y^3 - 35y^2 + 56y - 28"
    assert Y ** 3 == Poly.monomial(1, 3)
    assert (Y - 1).compose_linear(1, 1) == Y
    assert Poly([1, 2, 3]).negate_variable() == Poly([1, -2, 3])
    assert Poly([Fraction(1, 2)]) * 2 == ONE
    assert 1 - Y == Poly([1, -1])


def test_poly2():
    x, y = Poly2.x(), Poly2.y()
    t = x * x + x * y + y
    assert t(2, 3) == 4 + 6 + 3
    assert str(Poly2.one()) == "1"


def test_transition_weights():
    w = TransitionWeights(1, "1/2", 0)
    assert w.b == Fraction(1, 2)


# --------------------------------------------------------------------------
# worked fixtures
# --------------------------------------------------------------------------

def test_fano_values(f7):
    assert p1(f7.system) == Poly([-28, 56, -35, 8, -1])
    pf = Poly([28, -56, 35, -8, 1])
    assert penrose_direct(f7.system) == pf
    assert penrose_recursive(f7.system) == pf
    for z in f7.bases()[:5]:
        assert penrose_fundamental(f7, z) == pf
    assert penrose_direct(f7.dual().system).is_zero()
    assert f7.system.dual_pivot(f7.ground) == f7.system
    plus = f7.system.loop_complement(f7.ground)
    assert len(plus) == 56
    assert set(plus.members()) == set(f7.bases()) | set(f7.dual().bases())


def test_u35_p1_and_u25_penrose():
    cubic = Poly([-10, 15, -6, 1])
    assert p1(uniform(3, 5).system) == cubic
    assert penrose_direct(uniform(2, 5).system) == cubic
    assert penrose_recursive(uniform(2, 5).system) == cubic
    assert penrose_direct(uniform(3, 5).system).is_zero()
    assert penrose_recursive(uniform(3, 5).system).is_zero()


# The graphs of a small p1 recursion tree, vertices 1..5
RECURSION_TREE = {
    "G": (Graph.from_edges((1, 2, 3, 4, 5), [(1, 4), (1, 2), (1, 3), (2, 4), (3, 4), (2, 5), (3, 5)], [2, 3]),
          Poly([8, -12, 4])),
    "G1": (Graph.from_edges((2, 3, 4, 5), [(2, 4), (4, 3), (3, 5), (5, 2)], [2, 3]), Poly([4, -6, 2])),
    "G12": (Graph.from_edges((3, 4, 5), [(5, 3), (3, 4)], [3]), Poly([2, -3, 1])),
    "G12*": (Graph.from_edges((3, 4, 5), [(4, 5), (5, 3), (3, 4)], [3, 4, 5]), Poly([-2, 3, -1])),
    "G-45L": (Graph.from_edges((4, 5)), Poly([1, -2, 1])),
    "G-45R": (Graph.from_edges((4, 5), [(4, 5)], [4, 5]), Poly([-1, 1])),
    "G-4L": (Graph.from_edges((4,)), Poly([1, -1])),
    "G-4R": (Graph.from_edges((4,), [], [4]), Poly([])),
    "empty": (Graph.from_edges(()), ONE),
}


@pytest.mark.parametrize("name", sorted(RECURSION_TREE))
def test_recursion_tree_graph_values(name):
    g, expected = RECURSION_TREE[name]
    assert p1_graph_direct(g) == expected
    assert p1_graph_recursive(g) == expected


def test_recursion_tree_edges():
    g = RECURSION_TREE["G"][0]
    g1 = RECURSION_TREE["G1"][0]
    assert g.delete(1) == g1
    assert g.edge_local_complement(1, 4).delete(1) == g1
    assert g1.delete(2) == RECURSION_TREE["G12"][0]
    assert g1.local_complement(2).delete(2) == RECURSION_TREE["G12*"][0]
    # the top value is p1(G1) + p1(G1) and p1(G1) = p1(G12) - p1(G12*)
    assert RECURSION_TREE["G"][1] == RECURSION_TREE["G1"][1] * 2
    assert RECURSION_TREE["G1"][1] == RECURSION_TREE["G12"][1] - RECURSION_TREE["G12*"][1]


def test_diamond_penrose_by_three_methods(diamond):
    s = diamond.system
    assert penrose_direct(s) == DIAMOND_P
    assert penrose_recursive(s) == DIAMOND_P
    assert penrose_fundamental(diamond, (1, 2, 3)) == DIAMOND_P
    # the sign that a (y - 1) prefactor would give is ruled out
    assert penrose_direct(s) != Poly([-8, 12, -4])


def test_diamond_fundamental_graph_is_recursion_tree_top(diamond):
    top = diamond.system.dual_pivot(diamond.ground).twist((1, 2, 3))
    small = {z for z in top.members() if len(z) <= 2}
    assert small == set(sets("", "2", "3", "12", "13", "14", "23", "24", "25", "34", "35"))
    assert graph_from_small_sets(top) == RECURSION_TREE["G"][0]


def test_diamond_tutte(diamond):
    x, y = Poly2.x(), Poly2.y()
    expected = x * x * x + x * x * 2 + x + y + x * y * 2 + y * y
    t = tutte(diamond)
    assert t == expected
    assert t(0, -3) == 6
    # deletion-contraction on edge 5: C4 and the double digon
    c4 = tutte(diamond.delete(5))
    digons = tutte(diamond.contract(5))
    assert c4 == x * x * x + x * x + x + y
    assert digons == (x + y) * (x + y)
    assert t == c4 + digons
    assert penrose_direct(diamond.system)(-2) == 2 ** 3 * 6


def test_free_and_empty():
    assert penrose_direct(SetSystem((), [()])) == ONE
    assert penrose_recursive(SetSystem((), [()])) == ONE
    assert transition_recursive(SetSystem((), [()]), 2, 3) == ONE
    for n in range(1, 5):
        free = SetSystem(range(n), [tuple(range(n))])
        assert penrose_recursive(free) == penrose_direct(free)
        assert penrose_fundamental(Matroid(free), tuple(range(n))) == penrose_direct(free)


def test_single_element_transition():
    loop = SetSystem(("u",), [()])
    coloop = SetSystem(("u",), [("u",)])
    assert transition_recursive(loop, 2, 3) == Poly([2, 3])
    assert transition_recursive(coloop, 2, 3) == Poly([3, 2])
    assert transition_direct(loop, (2, 3, 0)) == Poly([2, 3])
    assert transition_direct(coloop, (2, 3, 0)) == Poly([3, 2])


# --------------------------------------------------------------------------
# oracle agreement
# --------------------------------------------------------------------------

def test_transition_recursive_matches_direct():
    rng = random.Random(11)
    for seed in range(30):
        s = random_delta_matroid(seed, rng.randint(1, 7), quaternary=seed % 2 == 0)
        a, b = rng.choice([(1, 1), (1, -1), (2, 3), (-1, 2)])
        assert transition_recursive(s, a, b) == transition_direct(s, (a, b, 0))


def test_transition_recursive_rejects_non_delta_matroid():
    with pytest.raises(ValidationError):
        transition_recursive(SetSystem((1, 2, 3), sets("", "123")), 1, 1)


def test_p1_is_transition_special_case():
    for seed in range(15):
        s = random_set_system(seed, 5)
        if s.is_proper:
            assert p1(s) == transition_direct(s, (1, -1, 0))


def test_penrose_is_transition_special_case():
    for seed in range(15):
        s = random_set_system(seed, 5)
        if s.is_proper:
            assert penrose_direct(s) == transition_direct(s, (0, 1, -1))


def test_penrose_three_routes_on_binary_fixtures():
    for name, m in binary_fixtures().items():
        p = penrose_direct(m.system)
        assert penrose_recursive(m.system) == p, name
        for z in m.bases()[:3]:
            assert penrose_fundamental(m, z) == p, name


def test_penrose_routes_on_random_binary():
    for seed in range(20):
        m = random_binary_matroid(seed, 3 + seed % 6)
        p = penrose_direct(m.system)
        assert penrose_recursive(m.system) == p
        assert penrose_fundamental(m, m.bases()[0]) == p


def test_penrose_recursive_precondition():
    # U_{2,6} is not vf-safe, but U_{2,6} dual-pivot V is a delta-matroid, so the recursion applies
    u26 = uniform(2, 6).system
    assert penrose_recursive(u26) == penrose_direct(u26)
    bad = SetSystem((1, 2, 3), sets("", "123")).dual_pivot((1, 2, 3))
    with pytest.raises(NotVfSafeError):
        penrose_recursive(bad)


def test_penrose_fundamental_errors():
    with pytest.raises(RepresentationError):
        penrose_fundamental(uniform(2, 4), (1, 2))
    with pytest.raises(SubsetError):
        penrose_fundamental(fano(), (1, 2, 3))  # {1, 2, 3} is a line, not a basis


def test_p1_graph_recursive_matches_direct():
    for seed in range(60):
        g = random_graph(seed, 1 + seed % 10, loop_p=0.4)
        assert p1_graph_recursive(g) == p1_graph_direct(g)
        assert p1(graph_delta_matroid(g)) == p1_graph_direct(g)


# --------------------------------------------------------------------------
# structural identities
# --------------------------------------------------------------------------

def test_four_way_symmetry():
    rng = random.Random(5)
    for seed in range(12):
        s = random_set_system(seed, rng.randint(1, 6), p=0.4)
        if not s.is_proper:
            continue
        v = s.ground
        for a, b, c in [(1, 2, 3), (2, -1, 1), (0, 1, -1)]:
            q = transition_direct(s, (a, b, c))
            assert transition_direct(s.loop_complement(v), (a, c, b)) == q
            assert transition_direct(s.dual_pivot(v), (c, b, a)) == q
            assert transition_direct(s.twist(v), (b, a, c)) == q


def test_even_sign_law():
    for seed in range(15):
        s = random_even_delta_matroid(seed, 6)
        assert s.is_even()
        d, dstar = s.d, s.twist(s.ground).d
        for a, b in [(1, 1), (1, -1), (2, 3), (3, -2)]:
            q = transition_direct(s, (a, b, 0))
            assert q == transition_direct(s, (a, -b, 0)).negate_variable() * (-1) ** d
            assert q == transition_direct(s, (-a, b, 0)).negate_variable() * (-1) ** dstar


def test_sign_under_loop_complement_and_twist():
    for seed in range(15):
        s = random_delta_matroid(seed, 5)
        p = penrose_direct(s)
        q = p1(s)
        for z in list(subsets(s.ground))[::5]:
            assert penrose_direct(s.loop_complement(z)) == p * (-1) ** len(z)
            assert p1(s.twist(z)) == q * (-1) ** len(z)


def test_degree_bound_for_matroids():
    fixtures = list(binary_fixtures().values()) + [uniform(2, 5), uniform(3, 5), uniform(2, 4)]
    fixtures += [random_binary_matroid(s, 6) for s in range(10)]
    for m in fixtures:
        p = penrose_direct(m.system)
        dstar = m.system.twist(m.ground).d
        assert p.degree <= dstar
        assert (p.degree == dstar) == (not p.is_zero())
        assert p.is_zero() == (odd_fixed_loop_complement(m.system) is not None)


def test_q110_at_one():
    for seed in range(10):
        s = random_set_system(seed, 5)
        if s.is_proper:
            assert transition_direct(s, (1, 1, 0))(1) == 2 ** s.n


def test_tutte_identity():
    for seed in range(10):
        m = random_binary_matroid(seed, 6)
        for a, b in [(1, 1), (2, 3), (-1, 2)]:
            assert verify_transition_tutte(m, a, b)
        q = transition_direct(m.system, (1, 1, 0))
        t = tutte(m)
        assert all(q(yv) == t(1 + yv, 1 + yv) for yv in range(-3, 4))
    with pytest.raises(ValueError):
        verify_transition_tutte(fano(), 0, 1)


def test_tutte_of_singletons():
    x, y = Poly2.x(), Poly2.y()
    assert tutte(Matroid.from_bases(("u",), [()])) == y
    assert tutte(Matroid.from_bases(("u",), [("u",)])) == x


def test_penrose_at_minus_two():
    for m in list(binary_fixtures().values()) + [uniform(2, 5), uniform(3, 5)]:
        assert penrose_direct(m.system)(-2) == 2 ** m.rank * tutte(m)(0, -3)


def test_interlace_identity():
    for seed in range(12):
        a = random_inv_symmetric(seed, 4)
        ma = principal_set_system(a)
        assert transition_direct(ma, (1, 1, 1)) == interlace_nullity_sum(a)


def test_capacity_limits():
    with pytest.raises(CapacityError):
        transition_direct(SetSystem(range(17), [()]), (1, 1, 1))


# --------------------------------------------------------------------------
# evaluation report
# --------------------------------------------------------------------------

def _report(s):
    return {e.name: e for e in penrose_evaluations(s)}


def test_evaluations_u25_u35():
    r = _report(uniform(2, 5).system)
    e = r["P(-1) = (-1)^d(M*V) 2^|V|"]
    assert e.applicable and e.passed and e.lhs == -32
    assert r["P(2) = (-1)^(d(M)+d(M*V)+|V|) 2^d(M)"].lhs == 4
    assert all(x.passed for x in r.values() if x.applicable)
    r = _report(uniform(3, 5).system)
    zero = r["P = 0 <=> deg P < d(M*V) <=> M+X = M for some odd X"]
    assert zero.applicable and zero.passed and "odd X={1 2 3 4 5}" == zero.rhs


def test_evaluations_eulerian_binary(k4):
    # the graph of a triangle with doubled edges is Eulerian
    from dmtool.matroid import graphic

    m = graphic((1, 2, 3), [(1, 1, 2), (2, 1, 2), (3, 2, 3), (4, 2, 3), (5, 1, 3), (6, 1, 3)])
    r = _report(m.system)
    e2 = r["Eulerian binary: P(2) = 2^rho"]
    e1 = r["Eulerian binary: P(-1) = (-1)^nu 2^|V|"]
    assert e2.applicable and e2.passed and e2.lhs == 2 ** m.rank
    assert e1.applicable and e1.passed and e1.lhs == (-1) ** m.nullity * 2 ** m.n
    assert not _report(k4.system)["Eulerian binary: P(2) = 2^rho"].applicable


def test_evaluations_pass_on_fixtures():
    for m in binary_fixtures().values():
        for e in penrose_evaluations(m.system):
            assert not e.applicable or e.passed, (e.name, e.lhs, e.rhs)
            assert e.line()
