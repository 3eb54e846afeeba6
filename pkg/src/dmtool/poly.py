"""
Exact polynomials in y and the transition-polynomial family.

Every polynomial here has either integer or rational coefficients.  The
direct evaluators enumerate subsets (or ordered tripartitions) of the ground
set with per-element operations on a dense indicator array; the recursive
evaluators follow deletion/pivot recursions on bitmask families.  The two
routes share no code beyond the set-system kernels, so they serve as
oracles for each other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from . import bits
from .errors import CapacityError, NotVfSafeError, RepresentationError, SubsetError, ValidationError
from .graph import (
    Graph,
    bit_edge_local_complement,
    bit_local_complement,
    bit_nullity,
    graph_delta_matroid,
    graph_from_small_sets,
)
from .setsys import ENUM_WARN, VF_SAFE_MAX, SetSystem, delta_matroid_violation, is_vf_safe, warn_enumeration

TRANSITION_MAX = 16
PENROSE_MAX = 20
DENSE_MAX = 12


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Poly:
    """Univariate polynomial in y with exact coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(Fraction(c) if not isinstance(c, int) else c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def y(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, y):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if isinstance(other, (list, tuple)):
            other = Poly(other)
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def compose_linear(self, c0, c1) -> "Poly":
        """p(c0 + c1*y)."""
        lin = Poly([c0, c1])
        out = Poly()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def negate_variable(self) -> "Poly":
        """p(-y)."""
        return Poly(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    def coeff_string(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if isinstance(mag, Fraction):
                num = f"({mag})"
            else:
                num = str(mag)
            if k == 0:
                body = num
            else:
                var = "y" if k == 1 else f"y^{k}"
                body = var if mag == 1 else f"{num}{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly([x])


ONE = Poly([1])
Y = Poly([0, 1])


class Poly2:
    """Bivariate polynomial in x, y as a coefficient grid {(i, j): c}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @staticmethod
    def _coerce(other) -> "Poly2":
        return other if isinstance(other, Poly2) else Poly2({(0, 0): other})

    def __add__(self, other):
        other = Poly2._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return Poly2(t)

    __radd__ = __add__

    def __mul__(self, other):
        other = Poly2._coerce(other)
        t = Counter()
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                t[(i + k, j + l)] += a * b
        return Poly2(t)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, x, y):
        acc = 0
        for (i, j), c in self.terms.items():
            acc += c * Fraction(x) ** i * Fraction(y) ** j
        return _norm(acc) if isinstance(acc, Fraction) else acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "".join(
                s for s in ((f"x^{i}" if i > 1 else "x" if i == 1 else ""), (f"y^{j}" if j > 1 else "y" if j == 1 else ""))
            )
            mag = abs(c)
            body = mono if mono and mag == 1 else f"{mag}{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __repr__(self):
        return f"Poly2({self.terms})"


@dataclass(frozen=True)
class TransitionWeights:
    a: Fraction
    b: Fraction
    c: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, (Rational, str)):
                raise TypeError(f"weight {name} must be an exact rational, got {v!r}")
            object.__setattr__(self, name, Fraction(v))


def _weights(w) -> TransitionWeights:
    if isinstance(w, TransitionWeights):
        return w
    return TransitionWeights(*w)


# --------------------------------------------------------------------------
# direct sums
# --------------------------------------------------------------------------

def _require_proper(m: SetSystem):
    if not m.is_proper:
        raise ValidationError("polynomials are defined for proper set systems only")


def _capacity(n: int, limit: int, what: str, base: int):
    if n > limit:
        raise CapacityError(f"{what} supports at most {limit} elements, got {n}")
    warn_enumeration(n, what, base=base, threshold=ENUM_WARN if base == 2 else VF_SAFE_MAX)


def tripartition_counts(m: SetSystem) -> Counter:
    """Counter of (|A|, |B|, |C|, d_{M*B dual-pivot C}) over ordered tripartitions (A, B, C)."""
    _require_proper(m)
    n = m.n
    out = Counter()
    if n <= DENSE_MAX:
        pc = bits.popcounts(n)

        def walk(i, f, na, nb, nc):
            if i == n:
                out[(na, nb, nc, int(pc[f].min()))] += 1
                return
            walk(i + 1, f, na + 1, nb, nc)
            walk(i + 1, bits.dense_twist(f, i), na, nb + 1, nc)
            walk(i + 1, bits.dense_dual_pivot(f, i), na, nb, nc + 1)

        walk(0, bits.to_dense(m.family, n), 0, 0, 0)
    else:
        def walk(i, fam, na, nb, nc):
            if i == n:
                out[(na, nb, nc, bits.min_size(fam))] += 1
                return
            walk(i + 1, fam, na + 1, nb, nc)
            walk(i + 1, bits.twist(fam, 1 << i), na, nb + 1, nc)
            walk(i + 1, bits.dual_pivot(fam, 1 << i), na, nb, nc + 1)

        walk(0, set(m.family), 0, 0, 0)
    return out


def transition_direct(m: SetSystem, w) -> Poly:
    """Q_[a,b,c](M)(y) as an explicit sum over ordered tripartitions of V."""
    w = _weights(w)
    _capacity(m.n, TRANSITION_MAX, "transition polynomial", 3)
    coeffs = Counter()
    for (na, nb, nc, d), cnt in tripartition_counts(m).items():
        coeffs[d] += cnt * w.a ** na * w.b ** nb * w.c ** nc
    top = max(coeffs, default=0)
    return Poly(coeffs.get(k, 0) for k in range(top + 1))


def p1(m: SetSystem) -> Poly:
    """p1(M)(y) = sum over X of (-1)^|X| y^{d_{M*X}}."""
    _require_proper(m)
    n = m.n
    _capacity(n, PENROSE_MAX, "p1", 2)
    fam = np.array(m.family, dtype=np.int64)
    pc = bits.popcounts(n)
    coeffs = Counter()
    chunk = max(1, (1 << 22) // max(1, len(fam)))
    for start in range(0, 1 << n, chunk):
        xs = np.arange(start, min(1 << n, start + chunk), dtype=np.int64)
        d = pc[xs[:, None] ^ fam[None, :]].min(axis=1)
        sign = np.where(pc[xs] % 2 == 0, 1, -1)
        for k, c in enumerate(np.bincount(d, weights=sign).tolist()):
            coeffs[k] += int(c)
    top = max(coeffs, default=0)
    return Poly(coeffs.get(k, 0) for k in range(top + 1))


def penrose_direct(m: SetSystem) -> Poly:
    """P_M(y) = sum over X of (-1)^|X| y^{d_{M*V dual-pivot X}}."""
    _require_proper(m)
    n = m.n
    _capacity(n, PENROSE_MAX, "Penrose polynomial", 2)
    base = m.twist(m.ground)
    coeffs = Counter()
    if n <= DENSE_MAX:
        pc = bits.popcounts(n)

        def walk(i, f, sign):
            if i == n:
                coeffs[int(pc[f].min())] += sign
                return
            walk(i + 1, f, sign)
            walk(i + 1, bits.dense_dual_pivot(f, i), -sign)

        walk(0, bits.to_dense(base.family, n), 1)
    else:
        def walk(i, fam, sign):
            if i == n:
                coeffs[bits.min_size(fam)] += sign
                return
            walk(i + 1, fam, sign)
            walk(i + 1, bits.dual_pivot(fam, 1 << i), -sign)

        walk(0, set(base.family), 1)
    top = max(coeffs, default=0)
    return Poly(coeffs.get(k, 0) for k in range(top + 1))


def interlace_nullity_sum(a) -> Poly:
    """sum over Z <= X <= V of t^{nullity((A+Z)[X])}, as a polynomial in t.

    For inv-symmetric A over GF(4) this is Q_[1,1,1](M_A)(t); substituting
    t = y - 2 gives the interlace polynomial Q(A)(y).
    """
    from .matrix import rank_of

    n = a.n
    e = a.entries
    coeffs = Counter()
    for xmask in range(1 << n):
        idx = [i for i in range(n) if xmask >> i & 1]
        for zmask in bits.iter_submasks(xmask):
            sub = [[e[i][j] ^ (1 if i == j and zmask >> i & 1 else 0) for j in idx] for i in idx]
            coeffs[len(idx) - rank_of(sub)] += 1
    top = max(coeffs, default=0)
    return Poly(coeffs.get(k, 0) for k in range(top + 1))


# --------------------------------------------------------------------------
# recursions on bitmask families
# --------------------------------------------------------------------------

def _drop(fam, i: int) -> frozenset:
    """Delete element i from every member (members containing i are discarded)."""
    b = 1 << i
    low = b - 1
    return frozenset((z & low) | ((z >> 1) & ~low) for z in fam if not z & b)


def _twist1(fam, i) -> frozenset:
    b = 1 << i
    return frozenset(z ^ b for z in fam)


def _dual_pivot1(fam, i) -> frozenset:
    return frozenset(bits.dual_pivot(fam, 1 << i))


def _loop_complement_all(fam, n) -> frozenset:
    return frozenset(bits.loop_complement(fam, (1 << n) - 1))


def _classify(fam, n):
    """Per element: 'loop' (in no member), 'coloop' (in every member) or None."""
    union = 0
    inter = (1 << n) - 1
    for z in fam:
        union |= z
        inter &= z
    return union, inter


def transition_recursive(m: SetSystem, a, b) -> Poly:
    """Q_[a,b,0](M)(y) by the deletion/twist recursion.

    Nonsingular u: a Q(M\\u) + b Q(M*u\\u); loop: (a + b y) Q(M\\u);
    coloop: (b + a y) Q(M*u\\u).  The element chosen is the first (in ground
    order) nonsingular one, else the first element.
    """
    a, b = Fraction(a), Fraction(b)
    _require_proper(m)
    v = delta_matroid_violation(m)
    if v is not None:
        raise ValidationError("transition_recursive needs a delta-matroid")
    loop_f = Poly([a, b])
    coloop_f = Poly([b, a])

    @lru_cache(maxsize=None)
    def q(n, fam):
        if n == 0:
            return ONE
        if not fam:
            raise ValidationError("recursion reached an empty set system; input is not a delta-matroid")
        union, inter = _classify(fam, n)
        u = next((i for i in range(n) if union >> i & 1 and not inter >> i & 1), 0)
        if not union >> u & 1:
            return loop_f * q(n - 1, _drop(fam, u))
        if inter >> u & 1:
            return coloop_f * q(n - 1, _drop(_twist1(fam, u), u))
        return q(n - 1, _drop(fam, u)) * a + q(n - 1, _drop(_twist1(fam, u), u)) * b

    return q(m.n, frozenset(m.family))


def penrose_recursive(m: SetSystem) -> Poly:
    """P_M(y) by recursion on u, judging singularity in M dual-pivot V.

    Nonsingular u: P(M*u\\u) - P(M dual-pivot u \\ u); coloop of M dual-pivot V:
    (1 - y) P(M*u\\u); loop: (y - 1) P(M dual-pivot u \\ u); V empty: 1.
    """
    _require_proper(m)
    top = m.dual_pivot(m.ground)
    if not top.is_proper or delta_matroid_violation(top) is not None:
        raise NotVfSafeError("M dual-pivot V is not a delta-matroid; the Penrose recursion does not apply")
    one_minus_y = Poly([1, -1])
    y_minus_one = Poly([-1, 1])

    @lru_cache(maxsize=None)
    def p(n, fam):
        if n == 0:
            return ONE
        if not fam:
            raise NotVfSafeError("Penrose recursion reached an empty set system; input is not vf-safe")
        dp = frozenset(bits.dual_pivot(fam, (1 << n) - 1))
        union, inter = _classify(dp, n)
        u = next((i for i in range(n) if union >> i & 1 and not inter >> i & 1), 0)
        if inter >> u & 1:
            return one_minus_y * p(n - 1, _drop(_twist1(fam, u), u))
        if not union >> u & 1:
            return y_minus_one * p(n - 1, _drop(_dual_pivot1(fam, u), u))
        return p(n - 1, _drop(_twist1(fam, u), u)) - p(n - 1, _drop(_dual_pivot1(fam, u), u))

    return p(m.n, frozenset(m.family))


# --------------------------------------------------------------------------
# graph p1
# --------------------------------------------------------------------------

def p1_graph_direct(g: Graph) -> Poly:
    """sum over X of (-1)^|X| y^{nu(G[X])}."""
    n = g.n
    _capacity(n, PENROSE_MAX, "graph p1", 2)
    rows = g.bit_rows()
    coeffs = Counter()
    for x in range(1 << n):
        coeffs[bit_nullity(rows, x)] += -1 if bits.popcount(x) & 1 else 1
    top = max(coeffs, default=0)
    return Poly(coeffs.get(k, 0) for k in range(top + 1))


def p1_graph_recursive(g: Graph) -> Poly:
    """p1(G) by local and edge-local complementation.

    Looped u: p1(G\\u) - p1(G*u\\u); unlooped edge {u,v}: p1(G\\u) + p1(G*{u,v}\\u);
    isolated unlooped u: (1 - y) p1(G\\u); empty graph: 1.
    """
    one_minus_y = Poly([1, -1])

    @lru_cache(maxsize=None)
    def rec(rows, alive):
        if not alive:
            return ONE
        u = (alive & -alive).bit_length() - 1
        b = 1 << u
        nb = rows[u] & alive
        rest = alive & ~b
        if nb & b:
            return rec(rows, rest) - rec(tuple(bit_local_complement(rows, u, alive)), rest)
        if not nb:
            return one_minus_y * rec(rows, rest)
        unlooped = [v for v in bits.iter_bits(nb) if not rows[v] >> v & 1]
        if unlooped:
            v = unlooped[0]
            return rec(rows, rest) + rec(tuple(bit_edge_local_complement(rows, u, v, alive)), rest)
        w = (nb & -nb).bit_length() - 1
        rest_w = alive & ~(1 << w)
        return rec(rows, rest_w) - rec(tuple(bit_local_complement(rows, w, alive)), rest_w)

    return rec(tuple(g.bit_rows()), (1 << g.n) - 1)


def penrose_fundamental(m, basis) -> Poly:
    """P_M = (-1)^{nu(M)} p1(G) where M_G = M dual-pivot V * Z."""
    s = m.system if hasattr(m, "system") else m
    top = s.dual_pivot(s.ground).twist(basis)
    if 0 not in top.family:
        raise SubsetError(f"{sorted(basis, key=str)} is not a basis: M dual-pivot V * Z lacks the empty set")
    g = graph_from_small_sets(top)
    if graph_delta_matroid(g) != top:
        raise RepresentationError("M dual-pivot V * Z is not the delta-matroid of a graph; M is not binary")
    nu = s.n - s.d
    poly = p1_graph_recursive(g)
    return -poly if nu % 2 else poly


# --------------------------------------------------------------------------
# Tutte polynomial
# --------------------------------------------------------------------------

def tutte(m) -> Poly2:
    """Tutte polynomial of a matroid by deletion and contraction."""
    s = m.system if hasattr(m, "system") else m
    x, y = Poly2.x(), Poly2.y()

    @lru_cache(maxsize=None)
    def t(n, fam):
        if n == 0:
            return Poly2.one()
        union, inter = _classify(fam, n)
        u = n - 1
        if not union >> u & 1:
            return y * t(n - 1, _drop(fam, u))
        if inter >> u & 1:
            return x * t(n - 1, _drop(_twist1(fam, u), u))
        deleted = _drop(fam, u)
        contracted = _drop(_twist1(fam, u), u)
        return t(n - 1, deleted) + t(n - 1, contracted)

    return t(s.n, frozenset(s.family))


def verify_transition_tutte(m, a, b, samples: Sequence = range(-3, 4)) -> bool:
    """Q_[a,b,0](M)(y) == a^nu b^rho t_M(1 + (a/b) y, 1 + (b/a) y) at each sample y."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("the transition/Tutte identity needs nonzero weights")
    s = m.system if hasattr(m, "system") else m
    rho = s.d
    nu = s.n - rho
    q = transition_direct(s, (a, b, 0))
    t = tutte(s)
    for yv in samples:
        lhs = q(Fraction(yv))
        rhs = a ** nu * b ** rho * t(1 + a / b * yv, 1 + b / a * yv)
        if lhs != rhs:
            return False
    return True


# --------------------------------------------------------------------------
# evaluation report
# --------------------------------------------------------------------------

@dataclass
class Evaluation:
    name: str
    applicable: bool
    passed: bool | None = None
    lhs: object = None
    rhs: object = None
    reason: str = ""

    def line(self) -> str:
        if not self.applicable:
            return f"skip  {self.name}: {self.reason}"
        status = "pass" if self.passed else "FAIL"
        return f"{status}  {self.name}: {self.lhs} == {self.rhs}"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "passed": self.passed,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "reason": self.reason,
        }


def odd_fixed_loop_complement(m: SetSystem):
    """An odd-size X with M + X = M, or None."""
    n = m.n
    warn_enumeration(n, "odd fixed-point scan")
    target = set(m.family)
    for x in range(1 << n):
        if bits.popcount(x) & 1 and bits.loop_complement(target, x) == target:
            return m.labels(x)
    return None


def penrose_evaluations(m: SetSystem) -> list[Evaluation]:
    from .matroid import Matroid, binary_representation
    from .errors import RepresentationError as _RepErr

    _require_proper(m)
    n = m.n
    p = penrose_direct(m)
    out = []
    d_m = m.d
    d_dual = m.twist(m.ground).d
    top = m.dual_pivot(m.ground)
    even = top.is_even()
    vf = None
    vf_reason = ""
    if n <= VF_SAFE_MAX:
        vf = is_vf_safe(m)
    else:
        vf_reason = f"vf-safety check limited to {VF_SAFE_MAX} elements"
    equi = m.is_equicardinal()
    is_matroid = equi and delta_matroid_violation(m) is None

    if n > 0:
        out.append(Evaluation("P(1) = 0", True, p(1) == 0, p(1), 0))
    else:
        out.append(Evaluation("P(1) = 0", False, reason="empty ground set"))

    name = "P(-1) = (-1)^d(M*V) 2^|V|"
    if even:
        rhs = (-1) ** d_dual * 2 ** n
        out.append(Evaluation(name, True, p(-1) == rhs, p(-1), rhs))
    else:
        out.append(Evaluation(name, False, reason="M dual-pivot V is not even"))

    name = "P(2) = (-1)^(d(M)+d(M*V)+|V|) 2^d(M)"
    if even and vf:
        rhs = (-1) ** (d_m + d_dual + n) * 2 ** d_m
        out.append(Evaluation(name, True, p(2) == rhs, p(2), rhs))
    else:
        out.append(Evaluation(name, False, reason="M dual-pivot V is not even" if not even else (vf_reason or "M is not vf-safe")))

    names = ("Eulerian binary: P(2) = 2^rho", "Eulerian binary: P(-1) = (-1)^nu 2^|V|")
    binary = False
    if is_matroid:
        try:
            rep = binary_representation(Matroid(m, validate=False))
            binary = True
        except _RepErr:
            pass
    if binary:
        from .matroid import Subspace

        eulerian = tuple([1] * n) in Subspace.kernel(rep)
    if binary and eulerian:
        out.append(Evaluation(names[0], True, p(2) == 2 ** d_m, p(2), 2 ** d_m))
        rhs = (-1) ** (n - d_m) * 2 ** n
        out.append(Evaluation(names[1], True, p(-1) == rhs, p(-1), rhs))
    else:
        why = "not a matroid" if not is_matroid else "not binary" if not binary else "not Eulerian"
        out.extend(Evaluation(nm, False, reason=why) for nm in names)

    name = "P = 0 <=> deg P < d(M*V) <=> M+X = M for some odd X"
    if equi:
        x = odd_fixed_loop_complement(m)
        flags = (p.is_zero(), p.degree < d_dual, x is not None)
        out.append(Evaluation(
            name, True, len(set(flags)) == 1,
            f"zero={flags[0]} deg={p.degree} d(M*V)={d_dual}",
            "odd X=" + ("{" + " ".join(map(str, m.ordered(m.mask(x)))) + "}" if x is not None else "none"),
        ))
    else:
        out.append(Evaluation(name, False, reason="M is not equicardinal"))

    name = "P(-2) = 2^rho t(0,-3)"
    if is_matroid and vf:
        rhs = 2 ** d_m * tutte(m)(0, -3)
        out.append(Evaluation(name, True, p(-2) == rhs, p(-2), rhs))
    else:
        out.append(Evaluation(name, False, reason="not a matroid" if not is_matroid else (vf_reason or "M is not vf-safe")))
    return out
