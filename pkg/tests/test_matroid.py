from itertools import combinations

import pytest

from dmtool.errors import RepresentationError, ValidationError
from dmtool.field import Field
from dmtool.generators import random_binary_matroid, random_delta_matroid, random_inv_symmetric, random_quaternary_matroid
from dmtool.matrix import RectMatrix, SquareMatrix, principal_set_system
from dmtool.matroid import (
    Matroid,
    Subspace,
    binary_representation,
    column_matroid,
    cocycle_space,
    cycle_space,
    fano,
    graphic,
    is_orthogonal,
    matroid_of_subspace,
    project,
    standard_form,
    uniform,
)
from dmtool.setsys import SetSystem, is_delta_matroid

from conftest import DIAMOND_VERTICES, DIAMOND_EDGES, sets


def brute_circuits(m: Matroid):
    indep = lambda x: any(x <= b for b in m.bases())
    out = []
    for k in range(1, m.n + 1):
        for c in combinations(m.ground, k):
            c = frozenset(c)
            if not indep(c) and all(indep(c - {x}) for x in c):
                out.append(c)
    return set(out)


def test_six_bases(six):
    assert set(six.bases()) == set(sets("235", "236", "245", "246", "345", "346"))
    assert six.rank == 3 and six.nullity == 3
    assert six.system.twist(six.ground).d == 3
    # edge 1 is a self-loop of the graph, so it lies in no basis
    assert [u for u in six.ground if six.is_loop(u)] == [1]
    assert not any(six.is_coloop(u) for u in six.ground)


def test_diamond_bases(diamond):
    triples = set(map(frozenset, combinations(range(1, 6), 3)))
    assert set(diamond.bases()) == triples - set(sets("145", "235"))


def test_fano_bases(f7):
    assert len(f7.bases()) == 28
    assert len(f7.circuits()) == 14  # 7 lines and 7 complements of lines


def test_from_bases_validation():
    with pytest.raises(ValidationError):
        Matroid.from_bases((1, 2, 3), sets("1", "23"))
    with pytest.raises(ValidationError):
        Matroid.from_bases((1, 2, 3, 4), sets("12", "34"))
    with pytest.raises(ValidationError):
        Matroid.from_bases((1,), [])


def test_from_bases_accepts_exactly_equicardinal_delta_matroids():
    ground = (1, 2, 3)
    for f in range(1, 1 << 8):
        s = SetSystem._from_masks(ground, [m for m in range(8) if f >> m & 1])
        expected = s.is_equicardinal() and is_delta_matroid(s)
        try:
            Matroid(s)
            ok = True
        except ValidationError:
            ok = False
        assert ok == expected


def test_min_max_of_delta_matroids_are_matroids():
    for seed in range(20):
        s = random_delta_matroid(seed, 6)
        Matroid(s.min())
        Matroid(s.max())


def test_dual_and_minors(diamond):
    d = diamond.dual()
    assert set(d.bases()) == {frozenset(diamond.ground) - b for b in diamond.bases()}
    assert d.dual() == diamond
    # C4 after deleting edge 5, two digons after contracting it
    c4 = diamond.delete(5)
    assert c4.rank == 3 and len(c4.bases()) == 4
    digons = diamond.contract(5)
    assert digons.rank == 2 and len(digons.bases()) == 4
    assert digons.representation is not None
    assert column_matroid(digons.representation) == digons


def test_singular_minors():
    single_coloop = Matroid.from_bases(("u",), [("u",)])
    assert single_coloop.delete("u").system == SetSystem((), [()])
    single_loop = Matroid.from_bases(("u",), [()])
    assert single_loop.contract("u").system == SetSystem((), [()])
    assert single_loop.delete("u").system == SetSystem((), [()])


def test_minors_match_representations():
    for seed in range(10):
        m = random_quaternary_matroid(seed, 6)
        for u in m.ground:
            for minor in (m.delete(u), m.contract(u)):
                assert column_matroid(minor.representation) == minor


def test_circuits_against_brute_force():
    for m in (fano(), uniform(2, 4), graphic(DIAMOND_VERTICES, DIAMOND_EDGES), random_binary_matroid(3, 7)):
        assert set(m.circuits()) == brute_circuits(m)
    free = Matroid.from_bases((1, 2, 3), [(1, 2, 3)])
    assert free.circuits() == []


def test_six_cycle_spaces(six):
    cs = cycle_space(six)
    assert cs == Subspace.from_supports(six.ground, sets("1", "234", "56"))
    cos = cocycle_space(six)
    assert cos == Subspace.from_supports(six.ground, sets("23", "24", "56"))
    assert cs.dim == cos.dim == 3


def test_cycle_space_of_dual_is_orthogonal_complement():
    for seed in range(15):
        m = random_binary_matroid(seed, 7)
        assert cycle_space(m.dual()) == cycle_space(m).orthogonal_complement()
        assert matroid_of_subspace(cycle_space(m)) == m


def test_cycle_space_needs_binary_rep():
    with pytest.raises(RepresentationError):
        cycle_space(uniform(2, 4))
    with pytest.raises(RepresentationError):
        cycle_space(random_quaternary_matroid(1, 4, 2))


def test_binary_representation():
    for seed in range(10):
        m = random_binary_matroid(seed, 7)
        bare = Matroid(m.system)
        assert column_matroid(binary_representation(bare)) == m
    with pytest.raises(RepresentationError):
        binary_representation(uniform(2, 4))


def test_standard_form(six):
    b = standard_form(six.representation, (2, 4, 6))
    assert b.row_labels == (2, 4, 6)
    assert b.columns((2, 4, 6)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert column_matroid(b) == six


def test_column_matroid_of_inv_symmetric_is_max():
    for seed in range(15):
        a = random_inv_symmetric(seed, 5)
        assert column_matroid(a).system == principal_set_system(a).max()
    assert column_matroid(SquareMatrix.identity(Field.GF4, (1, 2, 3))).bases() == [frozenset({1, 2, 3})]


def test_subspace_operations():
    for seed in range(10):
        m = random_quaternary_matroid(seed, 6)
        l = Subspace.kernel(m.representation)
        assert l.orthogonal_complement().orthogonal_complement() == l
        assert l.inv_image().inv_image() == l
        lp = l.orthogonal_complement()
        both = l.intersection(lp)
        assert l.contains_all(both) and lp.contains_all(both)
        assert sum(1 for _ in both.vectors()) == 4 ** both.dim
        assert all(v in l and v in lp for v in both.vectors())
    full = Subspace.span(Field.GF2, (1, 2, 3), [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert full.intersection(full.orthogonal_complement()).dim == 0
    assert project((1, 1, 1), {2}, (1, 2, 3)) == (0, 1, 0)


def test_orthogonality_with_dual():
    for m in (fano(), uniform(2, 5), graphic(DIAMOND_VERTICES, DIAMOND_EDGES)):
        assert is_orthogonal(m, m.dual())
    # circuit {1, 2} meets the loop circuit {1} in one element
    assert not is_orthogonal(uniform(1, 2), uniform(0, 2))


def test_with_representation_checks():
    m = uniform(2, 3)
    good = RectMatrix.from_columns(Field.GF2, (1, 2, 3), [[1, 0], [0, 1], [1, 1]])
    assert m.with_representation(good).representation is good
    with pytest.raises(RepresentationError):
        m.with_representation(RectMatrix.from_columns(Field.GF2, (1, 2, 3), [[1, 0], [0, 1], [0, 1]]))
    with pytest.raises(RepresentationError):
        m.require_representation()
