"""Exact 3-smooth pitch arithmetic.

Every pitch in this package is a ratio ``3**pow3 / 2**pow2`` relative to a
symbolic reference note (do). Storing the two exponents instead of a
numerator/denominator pair keeps the representation canonical and makes
products and quotients plain integer additions.
"""

from __future__ import annotations

import decimal as _decimal
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

__all__ = [
    "PitchRatio",
    "ReducedPitch",
    "Pitch",
    "ONE",
    "TWO",
    "ell",
    "xi",
    "multiply",
    "octave_reduce",
    "compare",
    "cents",
    "decimal",
    "format_ratio",
]

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


@total_ordering
@dataclass(frozen=True)
class PitchRatio:
    """The dimensionless ratio ``3**pow3 / 2**pow2``.

    Equality is exponent equality, which is exact because 2 and 3 are coprime.
    Ordering is decided with big-integer comparison, never with floats.
    """

    pow3: int
    pow2: int

    def __mul__(self, other: PitchRatio) -> PitchRatio:
        if not isinstance(other, PitchRatio):
            return NotImplemented
        return PitchRatio(self.pow3 + other.pow3, self.pow2 + other.pow2)

    def __truediv__(self, other: PitchRatio) -> PitchRatio:
        if not isinstance(other, PitchRatio):
            return NotImplemented
        return PitchRatio(self.pow3 - other.pow3, self.pow2 - other.pow2)

    def __pow__(self, n: int) -> PitchRatio:
        return PitchRatio(self.pow3 * n, self.pow2 * n)

    def __lt__(self, other: PitchRatio) -> bool:
        if not isinstance(other, PitchRatio):
            return NotImplemented
        return compare(self, other) < 0

    def shift_octaves(self, n: int) -> PitchRatio:
        """Multiply by ``2**n``."""
        return PitchRatio(self.pow3, self.pow2 - n)

    @property
    def numerator(self) -> int:
        return 3 ** max(self.pow3, 0) * 2 ** max(-self.pow2, 0)

    @property
    def denominator(self) -> int:
        return 3 ** max(-self.pow3, 0) * 2 ** max(self.pow2, 0)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_reduced(self) -> bool:
        """True when the value lies in ``[1, 2)``."""
        return ONE <= self < TWO

    def __float__(self) -> float:
        return float(self.as_fraction())

    def __str__(self) -> str:
        return format_ratio(self, unicode=False)


# Values in [1, 2) share the representation; the alias documents intent.
ReducedPitch = PitchRatio

ONE = PitchRatio(0, 0)
TWO = PitchRatio(0, -1)


def ell(k: int) -> int:
    """Octave-reduction exponent ``floor(k * log2(3))``, computed exactly.

    For ``k > 0`` this is the bit length of ``3**k`` minus one. For negative
    ``k`` the product ``k * log2(3)`` is never an integer, hence
    ``ell(-k) = -ell(k) - 1``.
    """
    if k == 0:
        return 0
    if k > 0:
        return (3**k).bit_length() - 1
    return -ell(-k) - 1


def xi(k: int) -> PitchRatio:
    """The k-th note of the line of fifths brought into ``[1, 2)``."""
    return PitchRatio(k, ell(k))


def multiply(a: PitchRatio, b: PitchRatio) -> PitchRatio:
    return a * b


def octave_reduce(a: PitchRatio) -> tuple[PitchRatio, int]:
    """Return ``(r, e)`` with ``a == r * 2**e`` and ``1 <= r < 2``."""
    r = xi(a.pow3)
    return r, r.pow2 - a.pow2


def compare(a: PitchRatio, b: PitchRatio) -> int:
    """Three-way comparison: negative, zero or positive like ``a - b``."""
    d3 = a.pow3 - b.pow3
    d2 = a.pow2 - b.pow2
    # a/b = 3**d3 / 2**d2, compare against 1 with integers only
    lhs = 3 ** max(d3, 0) * 2 ** max(-d2, 0)
    rhs = 3 ** max(-d3, 0) * 2 ** max(d2, 0)
    return (lhs > rhs) - (lhs < rhs)


_CTX = _decimal.Context(prec=80, rounding=_decimal.ROUND_HALF_EVEN)
_LOG2_3 = _CTX.divide(_CTX.ln(_decimal.Decimal(3)), _CTX.ln(_decimal.Decimal(2)))


def cents(a: PitchRatio) -> int:
    """Nearest integer to ``1200 * log2(a)``, halves rounded away from zero.

    Exact halves cannot occur for a non-trivial 3-smooth ratio, so the tie rule
    is inert; 80 significant digits of ``log2(3)`` keep the rounding exact for
    any exponent that fits in memory.
    """
    if a.pow3 == 0:
        return -1200 * a.pow2
    value = _CTX.multiply(1200, _CTX.subtract(_CTX.multiply(a.pow3, _LOG2_3), a.pow2))
    return int(value.quantize(_decimal.Decimal(1), rounding=_decimal.ROUND_HALF_UP, context=_CTX))


def decimal(a: PitchRatio, places: int = 6) -> str:
    """Decimal expansion with ``places`` fractional digits, rounded half up."""
    if places < 1:
        raise ValueError("places must be >= 1")
    num, den = a.numerator, a.denominator
    scaled = (2 * num * 10**places + den) // (2 * den)
    whole, frac = divmod(scaled, 10**places)
    return f"{whole}.{frac:0{places}d}"


def _power(base: int, exp: int, unicode: bool) -> str:
    if exp == 1:
        return str(base)
    if unicode:
        return f"{base}{str(exp).translate(_SUPERSCRIPTS)}"
    return f"{base}^{exp}"


def format_ratio(a: PitchRatio, unicode: bool = True) -> str:
    """Render as a fraction of prime powers with the larger power on top.

    ``xi(7)`` gives ``3⁷/2¹¹`` and ``xi(-3)`` gives ``2⁵/3³``; with
    ``unicode=False`` the exponents are written with ``^``.
    """
    top, bottom = [], []
    for base, exp in ((3, a.pow3), (2, -a.pow2)):
        if exp > 0:
            top.append(_power(base, exp, unicode))
        elif exp < 0:
            bottom.append(_power(base, -exp, unicode))
    sep = "·" if unicode else "*"
    num = sep.join(top) or "1"
    if not bottom:
        return num
    den = sep.join(bottom)
    return f"{num}/({den})" if len(bottom) > 1 else f"{num}/{den}"


@dataclass(frozen=True)
class Pitch:
    """A named note of the line of fifths placed in a given octave.

    ``note`` is the fifth index k and ``octave`` the offset o, so the absolute
    ratio to do is ``xi(k) * 2**o``.
    """

    note: int
    octave: int = 0

    @property
    def ratio(self) -> PitchRatio:
        return xi(self.note).shift_octaves(self.octave)

    def shift_octaves(self, n: int) -> Pitch:
        return Pitch(self.note, self.octave + n)

    @classmethod
    def from_ratio(cls, r: PitchRatio) -> Pitch:
        reduced, octave = octave_reduce(r)
        return cls(reduced.pow3, octave)
