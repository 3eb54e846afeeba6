"""
Set systems (V, D) and the twist / loop complementation / dual pivot action.

Members are stored as bitmasks over the ordered ground set and kept sorted
by (cardinality, mask), which makes equality canonical and puts the
smallest members first.  Every public method takes subsets as iterables of
ground labels; a bare string is treated as a single label.
"""

from __future__ import annotations

import warnings
from itertools import product
from typing import Iterable

import numpy as np

from . import bits
from .errors import CapacityError, CapacityWarning, DmtoolError, SubsetError

MAX_GROUND = 64
VF_SAFE_MAX = 12
ENUM_WARN = 24


class SetSystem:
    __slots__ = ("ground", "family", "_pos")

    def __init__(self, ground: Iterable, sets: Iterable = ()):
        ground = tuple(ground)
        self._setup(ground)
        self.family = bits.canonical(self.mask(s) for s in sets)

    def _setup(self, ground):
        if len(set(ground)) != len(ground):
            raise ValueError("ground labels must be distinct")
        if len(ground) > MAX_GROUND:
            raise CapacityError(f"ground sets are limited to {MAX_GROUND} elements")
        self.ground = ground
        self._pos = {g: i for i, g in enumerate(ground)}

    @classmethod
    def _from_masks(cls, ground, masks) -> "SetSystem":
        self = cls.__new__(cls)
        self._setup(tuple(ground))
        self.family = bits.canonical(masks)
        return self

    def _derive(self, masks) -> "SetSystem":
        out = SetSystem.__new__(SetSystem)
        out.ground = self.ground
        out._pos = self._pos
        out.family = bits.canonical(masks)
        return out

    # -- labels <-> masks ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def mask(self, subset) -> int:
        if isinstance(subset, str):
            subset = (subset,)
        m = 0
        for x in subset:
            try:
                m |= 1 << self._pos[x]
            except KeyError:
                raise SubsetError(f"{x!r} is not in the ground set") from None
            except TypeError:
                raise SubsetError(f"{x!r} is not a valid element label") from None
        return m

    def bit(self, u) -> int:
        try:
            return 1 << self._pos[u]
        except (KeyError, TypeError):
            raise SubsetError(f"{u!r} is not in the ground set") from None

    def labels(self, mask: int) -> frozenset:
        return frozenset(self.ground[i] for i in bits.iter_bits(mask))

    def ordered(self, mask: int) -> tuple:
        return tuple(self.ground[i] for i in bits.iter_bits(mask))

    def members(self) -> list[frozenset]:
        return [self.labels(z) for z in self.family]

    # -- container protocol ---------------------------------------------

    def __contains__(self, subset) -> bool:
        m = self.mask(subset)
        return m in set(self.family)

    def __iter__(self):
        return iter(self.members())

    def __len__(self) -> int:
        return len(self.family)

    def __eq__(self, other):
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.ground == other.ground and self.family == other.family

    def __hash__(self):
        return hash((self.ground, self.family))

    def same_sets(self, other: "SetSystem") -> bool:
        """Equality up to reordering of the ground set."""
        return set(self.ground) == set(other.ground) and set(self.members()) == set(other.members())

    def __repr__(self):
        def fmt(z):
            return "{" + ",".join(map(str, self.ordered(z))) + "}"

        return f"SetSystem([{', '.join(map(str, self.ground))}], [{', '.join(fmt(z) for z in self.family)}])"

    def relabel(self, ground) -> "SetSystem":
        """Same family read against a new ground-label tuple of equal size."""
        ground = tuple(ground)
        if len(ground) != self.n:
            raise ValueError("relabel needs the same number of labels")
        return SetSystem._from_masks(ground, self.family)

    def reorder(self, ground) -> "SetSystem":
        """Same set system with the ground set listed in a different order."""
        ground = tuple(ground)
        if set(ground) != set(self.ground) or len(ground) != self.n:
            raise ValueError("reorder needs a permutation of the ground set")
        return SetSystem(ground, self.members())

    # -- the group action -----------------------------------------------

    def twist(self, subset) -> "SetSystem":
        """M * X: symmetric difference of every member with X."""
        return self._derive(bits.twist(self.family, self.mask(subset)))

    def loop_complement(self, subset) -> "SetSystem":
        """M + X."""
        return self._derive(bits.loop_complement(self.family, self.mask(subset)))

    def dual_pivot(self, subset) -> "SetSystem":
        """M dual-pivot X, the third involution *X +X *X."""
        return self._derive(bits.dual_pivot(self.family, self.mask(subset)))

    def restrict(self, subset) -> "SetSystem":
        """M[X]: the members contained in X, over ground set X."""
        x = self.mask(subset)
        keep = [i for i in range(self.n) if x >> i & 1]
        masks = [bits.compress(z, keep) for z in self.family if z & ~x == 0]
        return SetSystem._from_masks([self.ground[i] for i in keep], masks)

    def delete(self, subset) -> "SetSystem":
        """M \\ X = M[V \\ X]."""
        return self.restrict(self.labels(self.full & ~self.mask(subset)))

    # -- extremal sets ---------------------------------------------------

    @property
    def is_proper(self) -> bool:
        return bool(self.family)

    def _require_proper(self):
        if not self.family:
            raise DmtoolError("operation requires a proper set system")

    @property
    def d(self) -> int:
        """Smallest cardinality of a member."""
        self._require_proper()
        return bits.popcount(self.family[0])

    def min(self) -> "SetSystem":
        return self._derive(_extremal(self.family, minimal=True))

    def max(self) -> "SetSystem":
        return self._derive(_extremal(self.family, minimal=False))

    def extremal(self):
        """(min(M), max(M), d_M, d_{M*V})."""
        self._require_proper()
        return self.min(), self.max(), self.d, self.twist(self.ground).d

    # -- predicates ------------------------------------------------------

    def is_loop(self, u) -> bool:
        b = self.bit(u)
        return all(not z & b for z in self.family)

    def is_coloop(self, u) -> bool:
        b = self.bit(u)
        return all(z & b for z in self.family)

    def is_singular(self, u) -> bool:
        return self.is_loop(u) or self.is_coloop(u)

    def is_equicardinal(self) -> bool:
        return len({bits.popcount(z) for z in self.family}) <= 1

    def is_even(self) -> bool:
        return len({bits.popcount(z) & 1 for z in self.family}) <= 1


def _extremal(family, minimal: bool):
    if not family:
        return []
    arr = np.array(family, dtype=np.uint64)
    if len(arr) <= 4096:
        if minimal:
            # count members W with W <= Z
            hits = ((arr[None, :] & arr[:, None]) == arr[None, :]).sum(axis=1)
        else:
            # count members W with Z <= W
            hits = ((arr[:, None] & arr[None, :]) == arr[:, None]).sum(axis=1)
        return [z for z, h in zip(family, hits) if h == 1]
    out = []
    for z in family:
        zz = np.uint64(z)
        if minimal:
            h = int(((arr & zz) == arr).sum())
        else:
            h = int(((arr & zz) == zz).sum())
        if h == 1:
            out.append(z)
    return out


# --------------------------------------------------------------------------
# delta-matroid and vf-safety
# --------------------------------------------------------------------------

def _violation_masks(n: int, family):
    """First (X, Y, x) breaking symmetric exchange, as masks / index, or None."""
    if not family:
        return None
    fam = list(family)
    arr = np.array(fam, dtype=np.int64)
    ind = np.zeros(1 << max(n, 1), dtype=bool)
    ind[arr] = True
    # step[i, x] = mask of y with X ^ {x, y} in D (y == x meaning X ^ {x})
    single = np.int64(1) << np.arange(max(n, 1), dtype=np.int64)
    pair = single[:, None] ^ single[None, :]
    pair[np.diag_indices_from(pair)] = single
    hits = ind[arr[:, None, None] ^ pair[None, :, :]]
    step = (hits.astype(np.uint64) << np.arange(max(n, 1), dtype=np.uint64)).sum(axis=2, dtype=np.uint64)
    arr = arr.astype(np.uint64)
    delta = arr[:, None] ^ arr[None, :]
    for x in range(n):
        bx = np.uint64(1 << x)
        has_x = (delta & bx) != 0
        ok = (step[:, x][:, None] & delta) != 0
        bad = has_x & ~ok
        if bad.any():
            i, j = np.argwhere(bad)[0]
            return fam[int(i)], fam[int(j)], x
    return None


def delta_matroid_violation(m: SetSystem):
    """None for a delta-matroid, else (X, Y, x) with no valid exchange.

    An improper set system yields (None, None, None).
    """
    if not m.is_proper:
        return (None, None, None)
    v = _violation_masks(m.n, m.family)
    if v is None:
        return None
    x, y, u = v
    return m.labels(x), m.labels(y), m.ground[u]


def is_delta_matroid(m: SetSystem) -> bool:
    return m.is_proper and _violation_masks(m.n, m.family) is None


def _vf_leaves(n, family, i=0, z1=0, z2=0):
    """Families M + Z1 dual-pivot Z2 over disjoint Z1, Z2 (depth-first)."""
    if i == n:
        yield z1, z2, family
        return
    b = 1 << i
    yield from _vf_leaves(n, family, i + 1, z1, z2)
    yield from _vf_leaves(n, bits.loop_complement(family, b), i + 1, z1 | b, z2)
    yield from _vf_leaves(n, bits.dual_pivot(family, b), i + 1, z1, z2 | b)


def vf_safety_witness(m: SetSystem):
    """None if M is vf-safe, else (Z1, Z2) such that M + Z1 dual-pivot Z2 is no delta-matroid.

    Twists preserve being a delta-matroid and {id, +u, dual-pivot u} are
    coset representatives of <*u> in the per-element S3, so these 3^|V|
    systems cover the whole orbit.
    """
    if m.n > VF_SAFE_MAX:
        raise CapacityError(f"vf-safety check enumerates 3^|V| systems; |V| <= {VF_SAFE_MAX} supported")
    for z1, z2, fam in _vf_leaves(m.n, m.family):
        if not fam or _violation_masks(m.n, fam) is not None:
            return m.labels(z1), m.labels(z2)
    return None


def is_vf_safe(m: SetSystem) -> bool:
    return vf_safety_witness(m) is None


def orbit(m: SetSystem) -> set:
    """All set systems reachable by twists and loop complementations (6^|V| words)."""
    if m.n > 5:
        raise CapacityError("full orbit enumeration is limited to |V| <= 5")
    seen = set()
    for word in product(range(6), repeat=m.n):
        fam = set(m.family)
        for i, g in enumerate(word):
            for op in _S3_WORDS[g]:
                fam = _KERNELS[op](fam, 1 << i)
        seen.add(bits.canonical(fam))
    return {m._derive(f) for f in seen}


# --------------------------------------------------------------------------
# operation words
# --------------------------------------------------------------------------

_KERNELS = {
    "twist": bits.twist,
    "loopc": bits.loop_complement,
    "dualpivot": bits.dual_pivot,
}

KINDS = ("twist", "loopc", "dualpivot", "delete", "restrict")

# Faithful permutation model of S3 on three points: * swaps 0,1 and + swaps 1,2.
_GEN = {"twist": (1, 0, 2), "loopc": (0, 2, 1)}


def _compose(p, g):
    return tuple(g[p[i]] for i in range(3))


def _word_perm(word):
    p = (0, 1, 2)
    for op in word:
        if op == "dualpivot":
            for g in ("twist", "loopc", "twist"):
                p = _compose(p, _GEN[g])
        else:
            p = _compose(p, _GEN[op])
    return p


# per-element normal forms +a *b +c with a <= b, indexed by (a, b, c)
_NORMAL = {(a, b, c): [k for k, on in (("loopc", a), ("twist", b), ("loopc", c)) if on]
           for a, b, c in product((0, 1), repeat=3) if a <= b}
_NORMAL_BY_PERM = {_word_perm(w): key for key, w in _NORMAL.items()}
_S3_WORDS = [w for _, w in sorted(_NORMAL.items())]


def _parse_ops(m: SetSystem, ops):
    parsed = []
    for kind, subset in ops:
        if kind not in KINDS:
            raise ValueError(f"unknown operation {kind!r}; expected one of {', '.join(KINDS)}")
        parsed.append((kind, subset))
    return parsed


def apply_sequence(m: SetSystem, ops) -> SetSystem:
    """Apply (kind, subset) operations left to right."""
    for kind, subset in _parse_ops(m, ops):
        if kind == "twist":
            m = m.twist(subset)
        elif kind == "loopc":
            m = m.loop_complement(subset)
        elif kind == "dualpivot":
            m = m.dual_pivot(subset)
        elif kind == "delete":
            m = m.delete(subset)
        else:
            m = m.restrict(subset)
    return m


def normal_form(m: SetSystem, ops):
    """Reduce a twist / loopc / dualpivot word to (Z1, Z2, Z3) with Z1 <= Z2.

    ``M word == M + Z1 * Z2 + Z3`` for every set system M over the same ground set.
    """
    per_element = [[] for _ in range(m.n)]
    for kind, subset in _parse_ops(m, ops):
        if kind not in _KERNELS:
            raise ValueError("normal forms exist only for twist / loopc / dualpivot words")
        x = m.mask(subset)
        for i in bits.iter_bits(x):
            per_element[i].append(kind)
    z = [0, 0, 0]
    for i, word in enumerate(per_element):
        key = _NORMAL_BY_PERM[_word_perm(word)]
        for k in range(3):
            if key[k]:
                z[k] |= 1 << i
    return tuple(m.labels(x) for x in z)


def apply_normal_form(m: SetSystem, z1, z2, z3) -> SetSystem:
    return m.loop_complement(z1).twist(z2).loop_complement(z3)


def warn_enumeration(n: int, what: str, base: int = 2, threshold: int = ENUM_WARN):
    if n > threshold:
        warnings.warn(f"{what} enumerates {base}^{n} subsets", CapacityWarning, stacklevel=3)
