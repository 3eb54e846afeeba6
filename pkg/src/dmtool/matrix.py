"""
Set-indexed matrices over GF(2) / GF(4).

A :class:`SquareMatrix` is a V x V matrix whose rows and columns are indexed
by the same ordered ground set of labels.  Principal submatrices, deletion,
PPT and diagonal complementation all take subsets of labels.

Entries are integer codes (see :mod:`dmtool.field`).  The elimination
helpers at the top of the module work on plain lists of rows and are reused
by the subspace and matroid code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import FieldError, PivotError, SubsetError
from .field import (
    FROBENIUS,
    MUL,
    Automorphism,
    Field,
    FieldTag,
    apply_automorphism,
    check_code,
    gf4_inverse,
    neg,
)

MAX_GROUND = 64


# --------------------------------------------------------------------------
# elimination on lists of rows
# --------------------------------------------------------------------------

def _scale(row, c):
    m = MUL[c]
    return [m[x] for x in row]


def _axpy(target, src, c):
    """target + c * src"""
    m = MUL[c]
    return [t ^ m[s] for t, s in zip(target, src)]


def rref(rows: Sequence[Sequence[int]], ncols: int | None = None):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns).

    First-nonzero pivoting in column order, so the result is canonical for
    the row space.
    """
    work = [list(r) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        if work[r][c] != 1:
            work[r] = _scale(work[r], gf4_inverse(work[r][c]))
        for i in range(len(work)):
            if i != r and work[i][c]:
                work[i] = _axpy(work[i], work[r], work[i][c])
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank_of(rows) -> int:
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        inv = gf4_inverse(work[r][c])
        for i in range(r + 1, len(work)):
            if work[i][c]:
                work[i] = _axpy(work[i], work[r], MUL[work[i][c]][inv])
        r += 1
        if r == len(work):
            break
    return r


def det_of(rows) -> int:
    """Determinant of a square list-of-rows matrix (0x0 gives 1)."""
    work = [list(r) for r in rows]
    n = len(work)
    d = 1
    for c in range(n):
        p = next((i for i in range(c, n) if work[i][c]), None)
        if p is None:
            return 0
        # a row swap flips the sign, which is invisible in characteristic 2
        work[c], work[p] = work[p], work[c]
        piv = work[c][c]
        d = MUL[d][piv]
        inv = gf4_inverse(piv)
        for i in range(c + 1, n):
            if work[i][c]:
                work[i] = _axpy(work[i], work[c], MUL[work[i][c]][inv])
    return d


def inverse_of(rows):
    """Inverse of a square list-of-rows matrix, or None when singular."""
    n = len(rows)
    aug = [list(r) + [1 if j == i else 0 for j in range(n)] for i, r in enumerate(rows)]
    red, piv = rref(aug, n)
    if piv != list(range(n)):
        return None
    return [row[n:] for row in red]


def kernel_of(rows, ncols: int):
    """Basis of {v : rows * v = 0}, one vector per free column, in column order."""
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, piv):
            # row[p] = 1, so v[p] = -row[f] = row[f]
            v[p] = neg(row[f])
        basis.append(tuple(v))
    return basis


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * ncols
        for k in range(inner):
            c = row[k]
            if c:
                acc = _axpy(acc, b[k], c)
        out.append(acc)
    return out


# --------------------------------------------------------------------------
# matrix value types
# --------------------------------------------------------------------------

def _check_entries(field, nrows, ncols, entries):
    if len(entries) != nrows or any(len(r) != ncols for r in entries):
        raise ValueError(f"expected a {nrows}x{ncols} array of entries")
    for r in entries:
        for x in r:
            check_code(x, field)


def _labels(labels, what="ground"):
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise ValueError(f"{what} labels must be distinct")
    return labels


@dataclass(frozen=True)
class SquareMatrix:
    field: Field
    ground: tuple
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "ground", _labels(self.ground))
        entries = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(self.ground)
        if n > MAX_GROUND:
            raise ValueError(f"ground set larger than {MAX_GROUND}")
        _check_entries(self.field, n, n, entries)

    @classmethod
    def identity(cls, field: Field, ground) -> "SquareMatrix":
        ground = tuple(ground)
        n = len(ground)
        return cls(field, ground, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, ground) -> "SquareMatrix":
        ground = tuple(ground)
        n = len(ground)
        return cls(field, ground, [[0] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.ground)

    def index(self, label) -> int:
        try:
            return self.ground.index(label)
        except ValueError:
            raise SubsetError(f"{label!r} is not in the ground set") from None

    def indices(self, subset) -> list[int]:
        """Positions of a subset of labels, in ground order."""
        if isinstance(subset, str):
            subset = (subset,)
        wanted = set(subset)
        missing = wanted.difference(self.ground)
        if missing:
            raise SubsetError(f"{sorted(map(str, missing))} not in the ground set")
        return [i for i, g in enumerate(self.ground) if g in wanted]

    def __getitem__(self, key):
        x, y = key
        return self.entries[self.index(x)][self.index(y)]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def submatrix(self, subset) -> "SquareMatrix":
        """The principal submatrix A[X]."""
        idx = self.indices(subset)
        return SquareMatrix(
            self.field,
            [self.ground[i] for i in idx],
            [[self.entries[i][j] for j in idx] for i in idx],
        )

    def delete(self, subset) -> "SquareMatrix":
        """A \\ X = A[V \\ X]."""
        drop = set(self.indices(subset))
        keep = [g for i, g in enumerate(self.ground) if i not in drop]
        return self.submatrix(keep)

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(self.field, self.ground, list(zip(*self.entries)) if self.n else [])

    def negate(self) -> "SquareMatrix":
        return SquareMatrix(self.field, self.ground, [[neg(x) for x in r] for r in self.entries])

    def format(self) -> str:
        from .field import format_token

        width = max((len(str(g)) for g in self.ground), default=1)
        lines = []
        for g, r in zip(self.ground, self.entries):
            lines.append(f"{str(g):>{width}} " + " ".join(format_token(x) for x in r))
        return "\n".join(lines)

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class RectMatrix:
    """Matrix with row labels and column labels (e.g. a representation)."""

    field: Field
    row_labels: tuple
    col_labels: tuple
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "row_labels", _labels(self.row_labels, "row"))
        object.__setattr__(self, "col_labels", _labels(self.col_labels, "column"))
        entries = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", entries)
        _check_entries(self.field, len(self.row_labels), len(self.col_labels), entries)

    @classmethod
    def from_columns(cls, field: Field, col_labels, columns, row_labels=None):
        columns = [tuple(c) for c in columns]
        k = len(columns[0]) if columns else 0
        if row_labels is None:
            row_labels = [f"r{i}" for i in range(k)]
        entries = [[col[i] for col in columns] for i in range(k)]
        return cls(field, row_labels, col_labels, entries)

    def column_indices(self, subset) -> list[int]:
        wanted = set(subset)
        missing = wanted.difference(self.col_labels)
        if missing:
            raise SubsetError(f"{sorted(map(str, missing))} not among the columns")
        return [i for i, g in enumerate(self.col_labels) if g in wanted]

    def columns(self, subset) -> list[list[int]]:
        """Rows of the submatrix restricted to the given columns."""
        idx = self.column_indices(subset)
        return [[r[j] for j in idx] for r in self.entries]

    def rank(self) -> int:
        return rank_of(self.entries)

    def kernel(self):
        return kernel_of(self.entries, len(self.col_labels))

    def apply_automorphism(self, alpha: Automorphism) -> "RectMatrix":
        return RectMatrix(
            self.field,
            self.row_labels,
            self.col_labels,
            [[apply_automorphism(alpha, x) for x in r] for r in self.entries],
        )

    def format(self) -> str:
        from .field import format_token

        width = max((len(str(g)) for g in self.row_labels), default=1)
        head = " " * (width + 1) + " ".join(str(c) for c in self.col_labels)
        lines = [head]
        for g, r in zip(self.row_labels, self.entries):
            lines.append(f"{str(g):>{width}} " + " ".join(format_token(x) for x in r))
        return "\n".join(lines)


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------

def det(a: SquareMatrix) -> int:
    return det_of(a.entries)


def rank(a: SquareMatrix) -> int:
    return rank_of(a.entries)


def nullity(a: SquareMatrix) -> int:
    return a.n - rank(a)


def null_space(a: SquareMatrix) -> list[tuple[int, ...]]:
    """Basis of ker(A) = {v : A v = 0}; vectors are indexed like ``a.ground``."""
    return kernel_of(a.entries, a.n)


def is_nonsingular(a: SquareMatrix, subset=None) -> bool:
    """Whether A[X] is nonsingular (A[{}] is nonsingular by convention)."""
    m = a if subset is None else a.submatrix(subset)
    return det(m) != 0


def ppt(a: SquareMatrix, subset) -> SquareMatrix:
    """Principal pivot transform A*X.

    With A = [[P, Q], [R, S]] in the (X, V\\X) block split,
    A*X = [[P^-1, -P^-1 Q], [R P^-1, S - R P^-1 Q]].
    """
    xi = a.indices(subset)
    if not xi:
        return a
    rest = [i for i in range(a.n) if i not in set(xi)]
    e = a.entries
    p = [[e[i][j] for j in xi] for i in xi]
    q = [[e[i][j] for j in rest] for i in xi]
    r = [[e[i][j] for j in xi] for i in rest]
    s = [[e[i][j] for j in rest] for i in rest]
    p_inv = inverse_of(p)
    if p_inv is None:
        raise PivotError([a.ground[i] for i in xi])
    pq = matmul(p_inv, q)
    top_right = [[neg(x) for x in row] for row in pq]
    bottom_left = matmul(r, p_inv)
    rpq = matmul(r, pq)
    bottom_right = [[x ^ neg(y) for x, y in zip(sr, rr)] for sr, rr in zip(s, rpq)]

    out = [[0] * a.n for _ in range(a.n)]
    for bi, i in enumerate(xi):
        for bj, j in enumerate(xi):
            out[i][j] = p_inv[bi][bj]
        for bj, j in enumerate(rest):
            out[i][j] = top_right[bi][bj]
    for bi, i in enumerate(rest):
        for bj, j in enumerate(xi):
            out[i][j] = bottom_left[bi][bj]
        for bj, j in enumerate(rest):
            out[i][j] = bottom_right[bi][bj]
    return SquareMatrix(a.field, a.ground, out)


def diag_complement(a: SquareMatrix, subset) -> SquareMatrix:
    """A+X: add 1 to the diagonal entries indexed by X."""
    idx = set(a.indices(subset))
    rows = a.rows()
    for i in idx:
        rows[i][i] ^= 1
    return SquareMatrix(a.field, a.ground, rows)


def apply_automorphism_matrix(alpha: Automorphism, a: SquareMatrix) -> SquareMatrix:
    if alpha is Automorphism.ID:
        return a
    if a.field is not Field.GF4:
        # inv fixes GF(2) pointwise
        return a
    return SquareMatrix(a.field, a.ground, [[FROBENIUS[x] for x in r] for r in a.entries])


def _tag(a: SquareMatrix, alpha) -> FieldTag:
    if isinstance(alpha, FieldTag):
        if alpha.field is not a.field:
            raise FieldError(f"automorphism given for {alpha.field.name}, matrix is over {a.field.name}")
        return alpha
    return FieldTag(a.field, Automorphism(alpha))


def is_alpha_symmetric(a: SquareMatrix, alpha=Automorphism.ID) -> bool:
    """alpha(-A^T) == A."""
    tag = _tag(a, alpha)
    return apply_automorphism_matrix(tag.automorphism, a.transpose().negate()) == a


def principal_minors(a: SquareMatrix):
    """Yield (subset of labels, det A[X]) for every X, including the empty set."""
    for k in range(a.n + 1):
        for idx in combinations(range(a.n), k):
            sub = [[a.entries[i][j] for j in idx] for i in idx]
            yield tuple(a.ground[i] for i in idx), det_of(sub)


def is_pu(a: SquareMatrix) -> bool:
    """Principal unimodularity: every principal minor lies in {0, 1, -1}."""
    if a.field is Field.GF2:
        return True
    return all(d in (0, 1) for _, d in principal_minors(a))


def principal_set_system(a: SquareMatrix):
    """The set system M_A: X is a member iff A[X] is nonsingular."""
    from .setsys import SetSystem

    n = a.n
    members = []
    e = a.entries
    for mask in range(1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        if det_of([[e[i][j] for j in idx] for i in idx]):
            members.append(mask)
    return SetSystem._from_masks(a.ground, members)


def from_tokens(field: Field, ground: Iterable, token_rows) -> SquareMatrix:
    from .field import parse_token

    return SquareMatrix(field, tuple(ground), [[parse_token(t) for t in r] for r in token_rows])
