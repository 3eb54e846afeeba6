"""Seeded random fixtures for property tests and the acceptance suite."""

from __future__ import annotations

import random

from .field import FROBENIUS, MUL, Automorphism, Field
from .graph import Graph
from .matrix import RectMatrix, SquareMatrix, inverse_of, matmul, principal_set_system, rank_of
from .matroid import Matroid, column_matroid
from .setsys import SetSystem


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def labels(n: int) -> tuple:
    return tuple(range(1, n + 1))


def random_inv_symmetric(seed, n: int) -> SquareMatrix:
    """GF(4) matrix with A[j][i] = inv(A[i][j]) and diagonal in {0, 1}."""
    rng = _rng(seed)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randrange(2)
        for j in range(i + 1, n):
            x = rng.randrange(4)
            rows[i][j] = x
            rows[j][i] = FROBENIUS[x]
    return SquareMatrix(Field.GF4, labels(n), rows)


def random_symmetric(seed, n: int, field: Field = Field.GF2) -> SquareMatrix:
    rng = _rng(seed)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randrange(field.size)
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.randrange(field.size)
    return SquareMatrix(field, labels(n), rows)


def random_matrix(seed, n: int, field: Field = Field.GF4) -> SquareMatrix:
    rng = _rng(seed)
    return SquareMatrix(field, labels(n), [[rng.randrange(field.size) for _ in range(n)] for _ in range(n)])


def random_graph(seed, n: int, p: float = 0.5, loop_p: float = 0.3) -> Graph:
    rng = _rng(seed)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = int(rng.random() < loop_p)
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = int(rng.random() < p)
    return Graph(SquareMatrix(Field.GF2, labels(n), rows))


def random_representation(seed, r: int, n: int, field: Field = Field.GF2) -> RectMatrix:
    """An r x n matrix of rank r."""
    rng = _rng(seed)
    while True:
        rows = [[rng.randrange(field.size) for _ in range(n)] for _ in range(r)]
        if rank_of(rows) == r:
            return RectMatrix(field, [f"r{i}" for i in range(r)], labels(n), rows)


def random_binary_matroid(seed, n: int, r: int | None = None) -> Matroid:
    rng = _rng(seed)
    if r is None:
        r = rng.randint(1, max(1, n - 1))
    return column_matroid(random_representation(rng, r, n, Field.GF2))


def random_quaternary_matroid(seed, n: int, r: int | None = None) -> Matroid:
    rng = _rng(seed)
    if r is None:
        r = rng.randint(1, max(1, n - 1))
    return column_matroid(random_representation(rng, r, n, Field.GF4))


def mutate_representation(seed, rep: RectMatrix, apply_inv: bool | None = None) -> RectMatrix:
    """Another representation of the same column matroid.

    Left-multiplies by a random invertible matrix, scales every column by a
    random nonzero scalar and (optionally) applies inv entrywise.
    """
    rng = _rng(seed)
    k = len(rep.row_labels)
    size = rep.field.size
    while True:
        t = [[rng.randrange(size) for _ in range(k)] for _ in range(k)]
        if inverse_of(t) is not None:
            break
    rows = matmul(t, [list(r) for r in rep.entries])
    scales = [rng.randrange(1, size) for _ in rep.col_labels]
    rows = [[MUL[s][x] for s, x in zip(scales, r)] for r in rows]
    if apply_inv is None:
        apply_inv = rep.field is Field.GF4 and rng.random() < 0.5
    out = RectMatrix(rep.field, rep.row_labels, rep.col_labels, rows)
    if apply_inv:
        out = out.apply_automorphism(Automorphism.INV)
    return out


def random_subset(seed, ground, p: float = 0.5) -> frozenset:
    rng = _rng(seed)
    return frozenset(g for g in ground if rng.random() < p)


def random_delta_matroid(seed, n: int, quaternary: bool = True) -> SetSystem:
    """M_A * X for a random inv-symmetric (or symmetric binary) A: a vf-safe delta-matroid."""
    rng = _rng(seed)
    a = random_inv_symmetric(rng, n) if quaternary else random_symmetric(rng, n)
    return principal_set_system(a).twist(random_subset(rng, labels(n)))


def random_even_delta_matroid(seed, n: int) -> SetSystem:
    """M_G * X for a loopless graph G; even because M_G is."""
    rng = _rng(seed)
    g = random_graph(rng, n, loop_p=0.0)
    return principal_set_system(g.matrix).twist(random_subset(rng, labels(n)))


def random_set_system(seed, n: int, p: float = 0.3) -> SetSystem:
    """A random proper set system (not necessarily a delta-matroid)."""
    rng = _rng(seed)
    masks = [x for x in range(1 << n) if rng.random() < p]
    if not masks:
        masks = [rng.randrange(1 << n)]
    return SetSystem._from_masks(labels(n), masks)
