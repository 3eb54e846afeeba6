"""
Bicycle spaces, bicycle matroids and the principal tripartition.

Subspace-level objects (standard representations, R(B, alpha), BC_L(Y))
live next to their set-system counterparts (max(M+Y), d of M*V dual-pivot
Y), so the two routes can be compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bits
from .errors import NotVfSafeError, RepresentationError, SubsetError
from .field import FROBENIUS, MUL, Automorphism, Field, apply_automorphism
from .graph import fundamental_graph, graph_nullity
from .matrix import RectMatrix, SquareMatrix, diag_complement, kernel_of, ppt
from .matroid import (
    Matroid,
    Subspace,
    binary_representation,
    standard_form,
)
from .setsys import SetSystem, delta_matroid_violation


def _system(m) -> SetSystem:
    return m.system if isinstance(m, Matroid) else m


# --------------------------------------------------------------------------
# representations
# --------------------------------------------------------------------------

def standard_representation(m: Matroid, basis) -> RectMatrix:
    """B = (I S) with rows and the first columns labelled by the basis.

    Columns are ordered basis first, then the remaining elements, each part
    in ground-set order.
    """
    rep = m.require_representation()
    if basis not in m.system:
        raise SubsetError(f"{sorted(basis, key=str)} is not a basis")
    b = standard_form(rep, basis)
    zs = [g for g in m.ground if g in set(basis)]
    rest = [g for g in m.ground if g not in set(basis)]
    order = zs + rest
    idx = [b.col_labels.index(c) for c in order]
    return RectMatrix(b.field, zs, order, [[r[j] for j in idx] for r in b.entries])


def r_matrix(b: RectMatrix, alpha=Automorphism.ID) -> SquareMatrix:
    """R(B, alpha) = [[0, S], [alpha(-S^T), 0]] over the column labels of B."""
    alpha = Automorphism(alpha)
    if alpha is Automorphism.INV and b.field is not Field.GF4:
        raise ValueError("inv needs a GF(4) matrix")
    xs = b.row_labels
    cols = b.col_labels
    xi = [cols.index(x) for x in xs]
    for r, i in enumerate(xi):
        if any(b.entries[r][j] != (1 if j == i else 0) for j in xi):
            raise RepresentationError("B is not in standard form (I S)")
    n = len(cols)
    row_of = {i: r for r, i in enumerate(xi)}
    out = [[0] * n for _ in range(n)]
    for i, r in row_of.items():
        for j in range(n):
            if j in row_of:
                continue
            s = b.entries[r][j]
            out[i][j] = s
            out[j][i] = apply_automorphism(alpha, s)  # -s == s in char 2
    return SquareMatrix(b.field, cols, out)


def bicycle_matrix(b: RectMatrix, y, alpha=Automorphism.INV) -> SquareMatrix:
    """A + (X u Y) * (X \\ Y) with A = R(B, alpha), X the row labels of B."""
    x = set(b.row_labels)
    y = set(y)
    a = r_matrix(b, alpha)
    return ppt(diag_complement(a, x | y), x - y)


# --------------------------------------------------------------------------
# bicycle spaces
# --------------------------------------------------------------------------

def bicycle_space(space: Subspace, y) -> Subspace:
    """BC_L(Y) = {v in L : pi_Y(v) in inv(L^perp)}.

    Writing v = c G for the basis rows g_i of L, the condition is
    sum_x in Y v(x) inv(g_j(x)) = 0 for every j, i.e. c K = 0 with
    K[i][j] = sum_x in Y g_i(x) inv(g_j(x)).
    """
    ys = set(y)
    missing = ys.difference(space.ground)
    if missing:
        raise SubsetError(f"{sorted(map(str, missing))} not in the ground set")
    pos = [i for i, g in enumerate(space.ground) if g in ys]
    gens = space.basis
    k = len(gens)
    kt = [[0] * k for _ in range(k)]  # K transposed: row j, column i
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            acc = 0
            for x in pos:
                acc ^= MUL[gi[x]][FROBENIUS[gj[x]]]
            kt[j][i] = acc
    coeffs = kernel_of(kt, k) if k else []
    vecs = []
    n = len(space.ground)
    for c in coeffs:
        v = [0] * n
        for ci, g in zip(c, gens):
            if ci:
                m = MUL[ci]
                v = [a ^ m[b] for a, b in zip(v, g)]
        vecs.append(v)
    return Subspace.span(space.field, space.ground, vecs)


def bicycle_space_enumerated(space: Subspace, y) -> Subspace:
    """BC_L(Y) by testing every vector of L (exponential; oracle use)."""
    target = space.orthogonal_complement().inv_image()
    ys = set(y)
    keep = [g in ys for g in space.ground]
    vecs = [v for v in space.vectors() if tuple(x if k else 0 for x, k in zip(v, keep)) in target]
    return Subspace.span(space.field, space.ground, vecs)


def bicycle_matroid(m, y, check: bool = True) -> Matroid:
    """BM_M(Y) = max(M + Y), validated as a matroid."""
    s = _system(m).loop_complement(y)
    if not s.is_proper:
        raise NotVfSafeError(f"M+Y is empty for Y={sorted(y, key=str)}; input is not vf-safe")
    top = s.max()
    if check:
        v = delta_matroid_violation(top)
        if v is not None:
            raise NotVfSafeError(f"max(M+Y) is not a matroid for Y={sorted(y, key=str)}; input is not vf-safe")
    return Matroid(top, validate=False)


def bicycle_dimension(m, y) -> int:
    """d of M*V dual-pivot Y."""
    s = _system(m)
    return s.twist(s.ground).dual_pivot(y).d


# --------------------------------------------------------------------------
# tripartition
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Tripartition:
    P: frozenset
    Q: frozenset
    R: frozenset

    def classes(self, ground) -> str:
        """One letter per element, in ground order."""
        return " ".join("P" if v in self.P else "Q" if v in self.Q else "R" for v in ground)

    def format(self, ground) -> str:
        def part(s):
            items = [str(v) for v in ground if v in s]
            return " ".join(items) if items else "-"

        return f"P: {part(self.P)}  Q: {part(self.Q)}  R: {part(self.R)}"


def _assemble(ground, labels: dict) -> Tripartition:
    parts = {"P": [], "Q": [], "R": []}
    for v in ground:
        found = labels[v]
        if len(found) != 1:
            raise NotVfSafeError(
                f"element {v!r} lies in {len(found)} classes ({''.join(found) or 'none'}); input is not vf-safe"
            )
        parts[found[0]].append(v)
    return Tripartition(frozenset(parts["P"]), frozenset(parts["Q"]), frozenset(parts["R"]))


def _not_coloop(s: SetSystem, v) -> bool:
    if not s.is_proper:
        raise NotVfSafeError("an intermediate set system is empty; input is not vf-safe")
    top = s.max()
    if delta_matroid_violation(top) is not None:
        raise NotVfSafeError("an intermediate max(.) is not a matroid; input is not vf-safe")
    return not top.is_coloop(v)


def tripartition(m) -> Tripartition:
    """P, Q, R by the coloop tests against max(M+V+v), max(M+V*v), max(M+V)."""
    s = _system(m)
    base = s.loop_complement(s.ground)
    r_test = None
    labels = {}
    for v in s.ground:
        found = []
        if _not_coloop(base.loop_complement([v]), v):
            found.append("P")
        if _not_coloop(base.twist([v]), v):
            found.append("Q")
        if r_test is None:
            top = base.max() if base.is_proper else None
            if top is None:
                raise NotVfSafeError("M+V is empty; input is not vf-safe")
            r_test = top
        if not r_test.is_coloop(v):
            found.append("R")
        labels[v] = found
    return _assemble(s.ground, labels)


def _binary_rep(m: Matroid) -> RectMatrix:
    if m.representation is not None and m.representation.field is Field.GF2:
        return m.representation
    return binary_representation(m)


def tripartition_classical(m: Matroid) -> Tripartition:
    """Tripartition from the cycle and cocycle spaces of a binary matroid."""
    rep = _binary_rep(m)
    cs = Subspace.kernel(rep)
    cs_perp = cs.orthogonal_complement()
    ground = m.ground

    def masks(space):
        return {sum(1 << i for i, x in enumerate(v) if x) for v in space.vectors()}

    c = masks(cs)
    cp = masks(cs_perp)
    both = c & cp
    labels = {}
    for i, v in enumerate(ground):
        b = 1 << i
        found = []
        if any(x & b and (x ^ b) in cp for x in c):
            found.append("P")
        if any(x & b and (x ^ b) in c for x in cp):
            found.append("Q")
        if any(x & b for x in both):
            found.append("R")
        labels[v] = found
    return _assemble(ground, labels)


def nullity_table(m: Matroid, basis) -> dict:
    """Per element: (nu(G+V+v), nu(G+V \\ v), nu(G+V), v in Z) for the fundamental graph G."""
    g = fundamental_graph(m, basis).loop_complement(m.ground)
    z = set(basis)
    base = graph_nullity(g)
    return {
        v: (graph_nullity(g.loop_complement([v])), graph_nullity(g.delete(v)), base, v in z)
        for v in m.ground
    }


def tripartition_fundamental(m: Matroid, basis) -> Tripartition:
    """Tripartition from nullities of the fundamental graph G with loops on every vertex."""
    labels = {}
    for v, (n_plus, n_del, n_base, in_z) in nullity_table(m, basis).items():
        top = max(n_plus, n_del, n_base)
        found = []
        if n_plus == top:
            found.append("Q" if in_z else "P")
        if n_del == top:
            found.append("P" if in_z else "Q")
        if n_base == top:
            found.append("R")
        labels[v] = sorted(found)
    return _assemble(m.ground, labels)


# --------------------------------------------------------------------------
# Eulerian and bipartite
# --------------------------------------------------------------------------

def is_bipartite(m: Matroid) -> bool:
    """Every circuit has even size."""
    from .matroid import _circuit_masks

    return all(bits.popcount(c) % 2 == 0 for c in _circuit_masks(m.system))


def is_eulerian(m: Matroid) -> bool:
    """The ground set is a disjoint union of circuits (for binary M: V is a cycle)."""
    from .matroid import _circuit_masks

    circuits = _circuit_masks(m.system)
    full = m.system.full

    def cover(left: int) -> bool:
        if not left:
            return True
        low = left & -left
        return any(c & low and c & left == c and cover(left ^ c) for c in circuits)

    return cover(full)


def is_eulerian_binary(m: Matroid) -> bool:
    """V lies in the cycle space of a binary representation."""
    rep = _binary_rep(m)
    return tuple([1] * m.n) in Subspace.kernel(rep)


def is_bipartite_gen(m) -> bool:
    """M + V is even."""
    s = _system(m)
    return s.loop_complement(s.ground).is_even()


def is_eulerian_gen(m) -> bool:
    """M dual-pivot V is even."""
    s = _system(m)
    return s.dual_pivot(s.ground).is_even()
