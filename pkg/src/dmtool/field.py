"""
Exact arithmetic in GF(2) and GF(4).

Scalars are two-bit codes: bit 0 is the coefficient of 1 and bit 1 the
coefficient of w, where w^2 = w + 1.  So

    0 -> 0,  1 -> 1,  2 -> w,  3 -> w^2 = w + 1

Addition is XOR of codes, multiplication goes through a 4x4 table.  GF(2)
is the {0, 1} part of the same encoding, so binary data embeds into
quaternary data without conversion.

The nontrivial automorphism ``inv`` of GF(4) is the Frobenius map x -> x^2,
which coincides with x -> x^-1 on nonzero elements.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import FieldError

ZERO, ONE, W, W2 = 0, 1, 2, 3

MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
_INVERSE = (None, 1, 3, 2)
FROBENIUS = (0, 1, 3, 2)

TOKENS = ("0", "1", "w", "W")
_TOKEN_CODE = {t: i for i, t in enumerate(TOKENS)}


class Field(enum.Enum):
    GF2 = 2
    GF4 = 4

    @property
    def size(self) -> int:
        return self.value

    @property
    def codes(self) -> range:
        return range(self.value)

    def __str__(self) -> str:
        return self.name.lower()


class Automorphism(enum.Enum):
    ID = "id"
    INV = "inv"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FieldTag:
    """A field together with an involutive automorphism of it."""

    field: Field
    automorphism: Automorphism = Automorphism.ID

    def __post_init__(self):
        if self.automorphism is Automorphism.INV and self.field is not Field.GF4:
            raise FieldError("the automorphism inv is only defined on GF(4)")

    def apply(self, x: int) -> int:
        return apply_automorphism(self.automorphism, x)


def check_code(x: int, field: Field = Field.GF4) -> int:
    if not isinstance(x, int) or not 0 <= x < field.size:
        raise FieldError(f"{x!r} is not an element of {field.name}")
    return x


def gf4_add(x: int, y: int) -> int:
    return x ^ y


def gf4_mul(x: int, y: int) -> int:
    return MUL[x][y]


def gf4_inverse(x: int) -> int:
    if x == 0:
        raise FieldError("zero has no multiplicative inverse")
    return _INVERSE[x]


def neg(x: int) -> int:
    # characteristic 2: -x == x
    return x


def apply_automorphism(alpha: Automorphism, x: int) -> int:
    if alpha is Automorphism.INV:
        return FROBENIUS[x]
    return x


def parse_token(token: str) -> int:
    try:
        return _TOKEN_CODE[token]
    except KeyError:
        raise FieldError(f"unknown GF(4) token {token!r}; expected one of 0 1 w W") from None


def format_token(x: int) -> str:
    return TOKENS[x]


class Gf4Element:
    """Value wrapper around a GF(4) code with the usual operators.

    The matrix and subspace code works on bare integer codes for speed; this
    class is the friendly scalar for interactive use and tests.
    """

    __slots__ = ("code",)

    def __init__(self, code):
        if isinstance(code, Gf4Element):
            code = code.code
        elif isinstance(code, str):
            code = parse_token(code)
        self.code = check_code(code)

    def __add__(self, other):
        return Gf4Element(self.code ^ Gf4Element(other).code)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return Gf4Element(MUL[self.code][Gf4Element(other).code])

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * Gf4Element(other).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Gf4Element(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "Gf4Element":
        return Gf4Element(gf4_inverse(self.code))

    def inv(self) -> "Gf4Element":
        """Image under the nontrivial automorphism."""
        return Gf4Element(FROBENIUS[self.code])

    def __eq__(self, other):
        if isinstance(other, Gf4Element):
            return self.code == other.code
        if isinstance(other, int):
            return self.code == other
        return NotImplemented

    def __hash__(self):
        return hash(("gf4", self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"Gf4Element({TOKENS[self.code]!r})"

    def __str__(self):
        return TOKENS[self.code]


GF4_ELEMENTS = tuple(Gf4Element(c) for c in range(4))
