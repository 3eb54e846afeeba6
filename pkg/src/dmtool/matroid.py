"""
Matroids described by their bases, plus subspaces of F^V.

A :class:`Matroid` wraps an equicardinal delta-matroid (its basis family)
and may carry a representation matrix.  Operations that need a
representation raise :class:`RepresentationError` rather than trying to
infer one; :func:`binary_representation` is the explicit way to build a
binary representation from the bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import bits
from .errors import RepresentationError, SubsetError, ValidationError
from .field import FROBENIUS, MUL, Automorphism, Field, apply_automorphism
from .matrix import RectMatrix, SquareMatrix, inverse_of, kernel_of, matmul, rank_of, rref
from .setsys import SetSystem, delta_matroid_violation, warn_enumeration


class Matroid:
    """A matroid given by its bases."""

    __slots__ = ("system", "representation", "rank", "nullity")

    def __init__(self, system: SetSystem, representation: RectMatrix | None = None, validate: bool = True):
        if validate:
            _validate_bases(system)
        self.system = system
        self.rank = system.d
        self.nullity = system.n - self.rank
        if representation is not None and tuple(representation.col_labels) != system.ground:
            raise RepresentationError("representation columns must match the ground set order")
        self.representation = representation

    @classmethod
    def from_bases(cls, ground: Iterable, bases: Iterable, representation=None) -> "Matroid":
        return cls(SetSystem(ground, bases), representation)

    @classmethod
    def from_system(cls, system: SetSystem) -> "Matroid":
        return cls(system)

    # -- basic accessors -------------------------------------------------

    @property
    def ground(self) -> tuple:
        return self.system.ground

    @property
    def n(self) -> int:
        return self.system.n

    def bases(self) -> list[frozenset]:
        return self.system.members()

    def is_basis(self, subset) -> bool:
        return subset in self.system

    def __eq__(self, other):
        if isinstance(other, Matroid):
            return self.system == other.system
        return NotImplemented

    def __hash__(self):
        return hash(self.system)

    def __repr__(self):
        return f"Matroid(rank={self.rank}, {self.system!r})"

    def with_representation(self, representation: RectMatrix) -> "Matroid":
        if column_matroid(representation).system != self.system:
            raise RepresentationError("matrix does not represent this matroid")
        return Matroid(self.system, representation, validate=False)

    def require_representation(self) -> RectMatrix:
        if self.representation is None:
            raise RepresentationError("this operation needs a matrix representation of the matroid")
        return self.representation

    # -- duality and minors ----------------------------------------------

    def dual(self) -> "Matroid":
        """M* = M * V.  A representation, if present, is carried over."""
        rep = None
        if self.representation is not None:
            rep = _dual_representation(self)
        return Matroid(self.system.twist(self.ground), rep, validate=False)

    def is_loop(self, u) -> bool:
        return self.system.is_loop(u)

    def is_coloop(self, u) -> bool:
        return self.system.is_coloop(u)

    def delete(self, u) -> "Matroid":
        """Matroid deletion: M \\ u, or M*u \\ u when u is a coloop."""
        s = self.system
        rest = [g for g in self.ground if g != u]
        if s.is_coloop(u):
            s = s.twist([u])
        s = s.delete([u])
        rep = None
        if self.representation is not None:
            rep = _rep_restrict(self.representation, rest)
        return Matroid(s, rep, validate=False)

    def contract(self, u) -> "Matroid":
        """Matroid contraction: M*u \\ u, or M \\ u when u is a loop."""
        s = self.system
        if not s.is_loop(u):
            s = s.twist([u])
        s = s.delete([u])
        rep = None
        if self.representation is not None:
            rep = _rep_contract(self.representation, u)
        return Matroid(s, rep, validate=False)

    # -- circuits ----------------------------------------------------------

    def is_independent(self, subset) -> bool:
        x = self.system.mask(subset)
        return any(x & b == x for b in self.system.family)

    def circuits(self) -> list[frozenset]:
        return [self.system.labels(c) for c in _circuit_masks(self.system)]


def _validate_bases(system: SetSystem):
    if not system.is_proper:
        raise ValidationError("a matroid needs at least one basis")
    if not system.is_equicardinal():
        sizes = sorted({bits.popcount(z) for z in system.family})
        raise ValidationError(f"bases have different sizes {sizes}")
    v = delta_matroid_violation(system)
    if v is not None:
        x, y, u = v
        raise ValidationError(
            f"basis exchange fails for {sorted(x, key=str)} and {sorted(y, key=str)} at element {u!r}"
        )


def _circuit_masks(system: SetSystem) -> list[int]:
    n = system.n
    warn_enumeration(n, "circuit enumeration")
    bases = np.array(system.family, dtype=np.uint64)

    def independent(x):
        return bool(((bases & np.uint64(x)) == np.uint64(x)).any())

    circuits = []
    for k in range(1, system.d + 2):
        for idx in combinations(range(n), k):
            x = 0
            for i in idx:
                x |= 1 << i
            if any(c & x == c for c in circuits):
                continue
            if not independent(x):
                circuits.append(x)
    return circuits


# --------------------------------------------------------------------------
# constructions
# --------------------------------------------------------------------------

def uniform(r: int, n: int, labels: Sequence | None = None) -> Matroid:
    labels = tuple(range(1, n + 1)) if labels is None else tuple(labels)
    if not 0 <= r <= n or len(labels) != n:
        raise ValueError("uniform(r, n) needs 0 <= r <= n and n labels")
    return Matroid(SetSystem(labels, combinations(labels, r)), validate=False)


def graphic(vertices: Iterable, edges: Iterable) -> Matroid:
    """Cycle matroid of a multigraph; edges are (label, u, v), u == v for a self-loop.

    Bases are the spanning forests.  The vertex-edge incidence matrix over
    GF(2) is attached as representation (a self-loop is a zero column).
    """
    vertices = tuple(vertices)
    edges = [tuple(e) for e in edges]
    labels = tuple(e[0] for e in edges)
    vpos = {v: i for i, v in enumerate(vertices)}
    for lab, u, v in edges:
        if u not in vpos or v not in vpos:
            raise ValueError(f"edge {lab!r} uses an unknown vertex")

    def components(subset_edges):
        parent = list(range(len(vertices)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        acyclic = True
        for _, u, v in subset_edges:
            ru, rv = find(vpos[u]), find(vpos[v])
            if ru == rv:
                acyclic = False
            else:
                parent[ru] = rv
        return len({find(i) for i in range(len(vertices))}), acyclic

    ncomp, _ = components(edges)
    r = len(vertices) - ncomp
    bases = []
    for combo in combinations(range(len(edges)), r):
        _, acyclic = components([edges[i] for i in combo])
        if acyclic:
            bases.append([labels[i] for i in combo])
    columns = []
    for _, u, v in edges:
        col = [0] * len(vertices)
        if u != v:
            col[vpos[u]] = 1
            col[vpos[v]] = 1
        columns.append(col)
    rep = RectMatrix.from_columns(Field.GF2, labels, columns, row_labels=vertices)
    return Matroid(SetSystem(labels, bases), rep, validate=False)


def fano(labels: Sequence | None = None) -> Matroid:
    """F7: the column matroid of the seven nonzero vectors of GF(2)^3."""
    labels = tuple(range(1, 8)) if labels is None else tuple(labels)
    cols = [[(k >> i) & 1 for i in range(3)] for k in range(1, 8)]
    rep = RectMatrix.from_columns(Field.GF2, labels, cols)
    return column_matroid(rep)


def column_matroid(a) -> Matroid:
    """M(A): bases are the maximal independent column sets of A."""
    if isinstance(a, SquareMatrix):
        a = RectMatrix(a.field, [f"r{i}" for i in range(a.n)], a.ground, a.entries)
    n = len(a.col_labels)
    r = rank_of(a.entries)
    cols = list(zip(*a.entries)) if a.entries else [() for _ in range(n)]
    bases = []
    for combo in combinations(range(n), r):
        sub = [[cols[j][i] for j in combo] for i in range(len(a.row_labels))]
        if rank_of(sub) == r:
            bases.append([a.col_labels[j] for j in combo])
    return Matroid(SetSystem(a.col_labels, bases), a, validate=False)


def binary_representation(m: Matroid) -> RectMatrix:
    """Standard binary representation [I | S] built from a basis.

    For a binary matroid the representation is forced: S[z][e] = 1 iff
    Z - z + e is a basis.  The result is checked, so a non-binary matroid
    raises :class:`RepresentationError`.
    """
    s = m.system
    z = s.family[0]
    zlist = list(bits.iter_bits(z))
    members = set(s.family)
    entries = []
    for zi in zlist:
        row = []
        for e in range(s.n):
            if z >> e & 1:
                row.append(1 if e == zi else 0)
            else:
                row.append(1 if (z ^ (1 << zi) ^ (1 << e)) in members else 0)
        entries.append(row)
    rep = RectMatrix(Field.GF2, [s.ground[i] for i in zlist], s.ground, entries)
    if column_matroid(rep).system != s:
        raise RepresentationError("matroid is not binary")
    return rep


def _rep_restrict(rep: RectMatrix, keep) -> RectMatrix:
    idx = rep.column_indices(keep)
    return RectMatrix(rep.field, rep.row_labels, [rep.col_labels[j] for j in idx],
                      [[r[j] for j in idx] for r in rep.entries])


def _rep_contract(rep: RectMatrix, u) -> RectMatrix:
    j = rep.col_labels.index(u)
    rows = [list(r) for r in rep.entries]
    p = next((i for i, r in enumerate(rows) if r[j]), None)
    keep = [c for c in rep.col_labels if c != u]
    if p is None:
        return _rep_restrict(rep, keep)
    from .field import gf4_inverse

    pivot = rows[p]
    inv = gf4_inverse(pivot[j])
    out = []
    for i, r in enumerate(rows):
        if i == p:
            continue
        c = MUL[r[j]][inv]
        out.append([x ^ MUL[c][y] for x, y in zip(r, pivot)])
    labels = [lab for i, lab in enumerate(rep.row_labels) if i != p]
    return _rep_restrict(RectMatrix(rep.field, labels, rep.col_labels, out), keep)


def standard_form(rep: RectMatrix, basis) -> RectMatrix:
    """Row-reduce a representation so that the columns of ``basis`` form an identity.

    Rows of the result are labelled by the basis elements (in column order).
    """
    rows, _ = rref(rep.entries, len(rep.col_labels))
    bidx = rep.column_indices(basis)
    if len(bidx) != len(rows):
        raise SubsetError("not a basis: size differs from the rank")
    c = [[r[j] for j in bidx] for r in rows]
    c_inv = inverse_of(c)
    if c_inv is None:
        raise SubsetError("not a basis: columns are dependent")
    b = matmul(c_inv, rows)
    return RectMatrix(rep.field, [rep.col_labels[j] for j in bidx], rep.col_labels, b)


def _dual_representation(m: Matroid) -> RectMatrix:
    """[-S^T | I] on the complement of a basis, from [I | S] on the basis."""
    rep = m.representation
    z = m.system.family[0]
    zl = set(m.system.ordered(z))
    b = standard_form(rep, zl)
    cols = rep.col_labels
    others = [c for c in cols if c not in zl]
    rows = []
    for e in others:
        je = cols.index(e)
        row = []
        for c in cols:
            if c in zl:
                row.append(b.entries[b.row_labels.index(c)][je])  # -S^T, char 2
            else:
                row.append(1 if c == e else 0)
        rows.append(row)
    return RectMatrix(rep.field, others, cols, rows)


# --------------------------------------------------------------------------
# subspaces
# --------------------------------------------------------------------------

def _dot(u, v) -> int:
    acc = 0
    for a, b in zip(u, v):
        acc ^= MUL[a][b]
    return acc


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^V held as the reduced row echelon form of a spanning set."""

    field: Field
    ground: tuple
    basis: tuple

    @classmethod
    def span(cls, field: Field, ground, vectors) -> "Subspace":
        ground = tuple(ground)
        rows, _ = rref([list(v) for v in vectors], len(ground))
        return cls(field, ground, tuple(tuple(r) for r in rows))

    @classmethod
    def kernel(cls, a) -> "Subspace":
        """ker(A) for a RectMatrix or SquareMatrix."""
        if isinstance(a, SquareMatrix):
            return cls.span(a.field, a.ground, kernel_of(a.entries, a.n))
        return cls.span(a.field, a.col_labels, kernel_of(a.entries, len(a.col_labels)))

    @classmethod
    def row_space(cls, a: RectMatrix) -> "Subspace":
        return cls.span(a.field, a.col_labels, a.entries)

    @classmethod
    def from_supports(cls, ground, supports) -> "Subspace":
        """Binary subspace spanned by characteristic vectors of label sets."""
        ground = tuple(ground)
        vecs = [[1 if g in set(s) else 0 for g in ground] for s in supports]
        return cls.span(Field.GF2, ground, vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        v = list(v)
        return rank_of(list(self.basis) + [v]) == self.dim

    def contains_all(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis)

    def vectors(self):
        """Every vector of the subspace (|F|^dim of them)."""
        n = len(self.ground)
        for coeffs in np.ndindex(*([self.field.size] * self.dim)):
            v = [0] * n
            for c, row in zip(coeffs, self.basis):
                if c:
                    m = MUL[int(c)]
                    v = [x ^ m[y] for x, y in zip(v, row)]
            yield tuple(v)

    def orthogonal_complement(self) -> "Subspace":
        """L^perp for the bilinear form <u, v> = sum u(x) v(x)."""
        n = len(self.ground)
        return Subspace.span(self.field, self.ground, kernel_of(self.basis, n) if self.basis else _unit_vectors(n))

    def inv_image(self) -> "Subspace":
        """inv(L): the automorphism applied pointwise."""
        return Subspace.span(self.field, self.ground, [[FROBENIUS[x] for x in v] for v in self.basis])

    def intersection(self, other: "Subspace") -> "Subspace":
        both = Subspace.span(
            self.field, self.ground,
            list(self.orthogonal_complement().basis) + list(other.orthogonal_complement().basis),
        )
        return both.orthogonal_complement()

    def support(self, v) -> frozenset:
        return frozenset(g for g, x in zip(self.ground, v) if x)

    def check_ambient(self, other: "Subspace"):
        if self.ground != other.ground:
            raise SubsetError("subspaces live over different ground sets")


def _unit_vectors(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def project(v, subset, ground) -> tuple:
    """pi_Y(v): zero every coordinate outside Y."""
    keep = set(subset)
    return tuple(x if g in keep else 0 for g, x in zip(ground, v))


def inner(u, v) -> int:
    return _dot(u, v)


def matroid_of_subspace(space: Subspace) -> Matroid:
    """M(L): circuits are the minimal nonempty supports of vectors of L.

    This is the column matroid of any matrix whose null space is L, i.e. of a
    matrix whose rows span L^perp.
    """
    h = space.orthogonal_complement()
    rows = list(h.basis)
    if not rows:
        rows = []
    rep = RectMatrix(space.field, [f"r{i}" for i in range(len(rows))], space.ground, rows)
    if not rows:
        return Matroid(SetSystem(space.ground, [()]), rep, validate=False)
    return column_matroid(rep)


def cycle_space(m: Matroid) -> Subspace:
    """CS_M = ker(A) for a binary representation A."""
    rep = m.require_representation()
    if rep.field is not Field.GF2:
        raise RepresentationError("the cycle space is defined for binary representations")
    return Subspace.kernel(rep)


def cocycle_space(m: Matroid) -> Subspace:
    rep = m.require_representation()
    if rep.field is not Field.GF2:
        raise RepresentationError("the cocycle space is defined for binary representations")
    return Subspace.row_space(rep)


def is_orthogonal(m1: Matroid, m2: Matroid) -> bool:
    """No circuit of M1 meets a circuit of M2 in exactly one element."""
    if m1.ground != m2.ground:
        if set(m1.ground) != set(m2.ground):
            raise SubsetError("matroids over different ground sets")
        m2 = Matroid(m2.system.reorder(m1.ground), validate=False)
    c1 = _circuit_masks(m1.system)
    c2 = _circuit_masks(m2.system)
    return all(bits.popcount(a & b) != 1 for a in c1 for b in c2)


def apply_automorphism_rep(alpha: Automorphism, rep: RectMatrix) -> RectMatrix:
    return RectMatrix(rep.field, rep.row_labels, rep.col_labels,
                      [[apply_automorphism(alpha, x) for x in r] for r in rep.entries])
