"""
Graphs with loops, stored as symmetric GF(2) adjacency matrices.

The delta-matroid of a graph is the principal set system of its adjacency
matrix, so most operations are thin wrappers over :mod:`dmtool.matrix`.
The bitmask row kernels at the bottom are the fast path used by the p1
recursion: a graph on n vertices is a list of n ints, row i holding the
neighbourhood of i (bit i set iff i carries a loop).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from . import bits
from .errors import PivotError, SubsetError, ValidationError
from .field import Field
from .matrix import SquareMatrix, diag_complement, is_alpha_symmetric, nullity, ppt, principal_set_system
from .setsys import SetSystem


class Graph:
    """Simple graph with optional loops; equality is equality of adjacency matrices."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: SquareMatrix):
        if matrix.field is not Field.GF2:
            raise ValueError("a graph is a symmetric matrix over GF(2)")
        if not is_alpha_symmetric(matrix):
            raise ValueError("adjacency matrix must be symmetric")
        self.matrix = matrix

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable = (), loops: Iterable = ()) -> "Graph":
        vertices = tuple(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        n = len(vertices)
        rows = [[0] * n for _ in range(n)]
        try:
            for u, v in edges:
                if u == v:
                    rows[pos[u]][pos[u]] = 1
                else:
                    rows[pos[u]][pos[v]] = rows[pos[v]][pos[u]] = 1
            for u in loops:
                rows[pos[u]][pos[u]] = 1
        except KeyError as e:
            raise SubsetError(f"{e.args[0]!r} is not a vertex") from None
        return cls(SquareMatrix(Field.GF2, vertices, rows))

    @classmethod
    def from_rows(cls, vertices, rows: list[int]) -> "Graph":
        n = len(vertices)
        return cls(SquareMatrix(Field.GF2, vertices, [[r >> j & 1 for j in range(n)] for r in rows]))

    @property
    def vertices(self) -> tuple:
        return self.matrix.ground

    @property
    def n(self) -> int:
        return self.matrix.n

    def has_loop(self, u) -> bool:
        return self.matrix[u, u] == 1

    def adjacent(self, u, v) -> bool:
        return self.matrix[u, v] == 1

    def neighbours(self, u) -> frozenset:
        return frozenset(w for w in self.vertices if self.matrix[u, w])

    def loops(self) -> list:
        return [u for u in self.vertices if self.has_loop(u)]

    def edges(self) -> list[tuple]:
        g = self.vertices
        e = self.matrix.entries
        return [(g[i], g[j]) for i, j in combinations(range(self.n), 2) if e[i][j]]

    def bit_rows(self) -> list[int]:
        return [sum(x << j for j, x in enumerate(r)) for r in self.matrix.entries]

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.matrix == other.matrix
        return NotImplemented

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)}, edges={self.edges()}, loops={self.loops()})"

    # -- operations ------------------------------------------------------

    def local_complement(self, u) -> "Graph":
        """G*{u}; u must carry a loop."""
        if not self.has_loop(u):
            raise PivotError([u])
        return Graph(ppt(self.matrix, [u]))

    def edge_local_complement(self, u, v) -> "Graph":
        """G*{u,v} for an edge between two unlooped vertices."""
        if u == v or self.has_loop(u) or self.has_loop(v) or not self.adjacent(u, v):
            raise PivotError([u, v])
        return Graph(ppt(self.matrix, [u, v]))

    def pivot(self, subset) -> "Graph":
        return Graph(ppt(self.matrix, subset))

    def loop_complement(self, subset) -> "Graph":
        """G+X: toggle the loops on X."""
        return Graph(diag_complement(self.matrix, subset))

    def delete(self, subset) -> "Graph":
        if isinstance(subset, str) or not isinstance(subset, (set, frozenset, list, tuple)):
            subset = [subset]
        return Graph(self.matrix.delete(subset))

    def induced(self, subset) -> "Graph":
        return Graph(self.matrix.submatrix(subset))

    def nullity(self) -> int:
        return graph_nullity(self)

    def nmax(self, v) -> int:
        return nmax(self, v)


def graph_nullity(g: Graph) -> int:
    """Nullity of the adjacency matrix over GF(2)."""
    return nullity(g.matrix)


def graph_loop_complement(g: Graph, subset) -> Graph:
    return g.loop_complement(subset)


def nmax(g: Graph, v) -> int:
    """max(nu(G), nu(G \\ v), nu(G + v))."""
    return max(graph_nullity(g), graph_nullity(g.delete(v)), graph_nullity(g.loop_complement([v])))


def graph_delta_matroid(g: Graph) -> SetSystem:
    """M_G: X is a member iff the adjacency matrix restricted to X is nonsingular."""
    return principal_set_system(g.matrix)


def graph_from_small_sets(system: SetSystem) -> Graph:
    """Rebuild G from the members of M_G of size at most two.

    u carries a loop iff {u} is a member; for u != v the 2x2 determinant is
    a_uu a_vv + a_uv, so a_uv = [{u,v} member] + a_uu a_vv.
    """
    if 0 not in system.family:
        raise ValidationError("the empty set must be a member of a graph delta-matroid")
    members = set(system.family)
    n = system.n
    loops = [1 if (1 << i) in members else 0 for i in range(n)]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = loops[i]
    for i, j in combinations(range(n), 2):
        a = (1 if ((1 << i) | (1 << j)) in members else 0) ^ (loops[i] & loops[j])
        rows[i][j] = rows[j][i] = a
    return Graph(SquareMatrix(Field.GF2, system.ground, rows))


def fundamental_graph(m, basis) -> Graph:
    """Bipartite graph with an edge {u, v} (u in Z, v not in Z) iff Z - u + v is a basis."""
    s = m.system if hasattr(m, "system") else m
    z = s.mask(basis)
    members = set(s.family)
    if z not in members:
        raise SubsetError(f"{sorted(basis, key=str)} is not a basis")
    n = s.n
    rows = [[0] * n for _ in range(n)]
    for i in bits.iter_bits(z):
        for j in range(n):
            if not z >> j & 1 and (z ^ (1 << i) ^ (1 << j)) in members:
                rows[i][j] = rows[j][i] = 1
    return Graph(SquareMatrix(Field.GF2, s.ground, rows))


# --------------------------------------------------------------------------
# bitmask kernels: rows are ints over the full index range, ``alive`` masks
# the vertices still present
# --------------------------------------------------------------------------

def bit_local_complement(rows: list[int], u: int, alive: int) -> list[int]:
    """Pivot on a looped vertex u: toggle the adjacency (and loops) inside N(u) - u."""
    b = 1 << u
    nu = rows[u] & alive & ~b
    out = list(rows)
    for w in bits.iter_bits(nu):
        out[w] ^= nu
    return out


def bit_edge_local_complement(rows: list[int], u: int, v: int, alive: int) -> list[int]:
    """Pivot on an edge {u, v} between unlooped vertices."""
    bu, bv = 1 << u, 1 << v
    rest = alive & ~(bu | bv)
    nu = rows[u] & rest
    nv = rows[v] & rest
    out = list(rows)
    for w in bits.iter_bits(rest):
        r = rows[w]
        new = r & rest
        if r & bu:
            new ^= nv
        if r & bv:
            new ^= nu
        if r & bv:
            new |= bu
        if r & bu:
            new |= bv
        out[w] = new
    out[u] = nv | bv
    out[v] = nu | bu
    return out


def bit_nullity(rows: list[int], alive: int) -> int:
    """Nullity over GF(2) of the adjacency matrix restricted to ``alive``."""
    work = [rows[i] & alive for i in bits.iter_bits(alive)]
    rank = 0
    for c in bits.iter_bits(alive):
        b = 1 << c
        p = next((i for i in range(rank, len(work)) if work[i] & b), None)
        if p is None:
            continue
        work[rank], work[p] = work[p], work[rank]
        piv = work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & b:
                work[i] ^= piv
        rank += 1
    return bits.popcount(alive) - rank
