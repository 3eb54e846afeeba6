"""
Bitmask kernels for families of subsets.

Subsets of a ground set with n <= 64 elements are Python ints (bit i set iff
the i-th ground element is present).  Two representations of a family are
used:

* sparse: a set / sorted tuple of masks.  Loop complementation and the dual
  pivot are done one element at a time by toggling, O(|family|) per element.
* dense: a numpy bool indicator array of length 2**n.  Only used by the
  subset-enumerating polynomial code where n is small; every per-element
  operation becomes one vectorized XOR over a (.., 2, 2**u) view.
"""

from __future__ import annotations

import numpy as np


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int):
    """Indices of set bits, lowest first."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def sort_key(x: int):
    return (popcount(x), x)


def canonical(family) -> tuple:
    return tuple(sorted(set(family), key=sort_key))


def iter_submasks(x: int):
    """All submasks of x (including 0 and x)."""
    s = x
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & x


# --------------------------------------------------------------------------
# sparse family kernels
# --------------------------------------------------------------------------

def twist(family, x: int) -> set:
    return {z ^ x for z in family}


def loop_complement(family, x: int) -> set:
    """Y is a member of M+X iff |{Z in M : Y\\X <= Z <= Y}| is odd.

    Per element u of X: every member Z with u not in Z toggles Z | u.
    """
    out = set(family)
    for u in iter_bits(x):
        b = 1 << u
        for z in [z for z in out if not z & b]:
            t = z | b
            if t in out:
                out.remove(t)
            else:
                out.add(t)
    return out


def dual_pivot(family, x: int) -> set:
    """Y is a member of M dual-pivot X iff |{Z in M : Y <= Z <= Y | X}| is odd.

    Per element u of X: every member Z with u in Z toggles Z \\ u.
    """
    out = set(family)
    for u in iter_bits(x):
        b = 1 << u
        for z in [z for z in out if z & b]:
            t = z ^ b
            if t in out:
                out.remove(t)
            else:
                out.add(t)
    return out


def min_size(family) -> int:
    return min(popcount(z) for z in family)


def compress(mask: int, keep: list[int]) -> int:
    """Re-index mask onto the positions listed in ``keep``."""
    out = 0
    for new, old in enumerate(keep):
        if mask >> old & 1:
            out |= 1 << new
    return out


# --------------------------------------------------------------------------
# dense indicator kernels
# --------------------------------------------------------------------------

_POPCOUNT_CACHE: dict[int, np.ndarray] = {}


def popcounts(n: int) -> np.ndarray:
    arr = _POPCOUNT_CACHE.get(n)
    if arr is None:
        arr = np.zeros(1 << n, dtype=np.int16)
        for i in range(n):
            arr[1 << i: 1 << (i + 1)] = arr[: 1 << i] + 1
        _POPCOUNT_CACHE[n] = arr
    return arr


def to_dense(family, n: int) -> np.ndarray:
    f = np.zeros(1 << n, dtype=bool)
    idx = np.fromiter(family, dtype=np.int64)
    f[idx] = True
    return f


def from_dense(f: np.ndarray) -> list[int]:
    return [int(i) for i in np.flatnonzero(f)]


def dense_twist(f: np.ndarray, u: int) -> np.ndarray:
    v = f.reshape(-1, 2, 1 << u)
    return v[:, ::-1, :].reshape(-1).copy()


def dense_loop_complement(f: np.ndarray, u: int) -> np.ndarray:
    g = f.copy()
    v = g.reshape(-1, 2, 1 << u)
    v[:, 1, :] ^= v[:, 0, :]
    return g


def dense_dual_pivot(f: np.ndarray, u: int) -> np.ndarray:
    g = f.copy()
    v = g.reshape(-1, 2, 1 << u)
    v[:, 0, :] ^= v[:, 1, :]
    return g


def dense_min_size(f: np.ndarray, n: int) -> int:
    return int(popcounts(n)[f].min())
