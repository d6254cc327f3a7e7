"""Exact arithmetic on the rational projective line.

Extended rationals Q ∪ {∞}, dyadic rationals, Farey mediants/intervals,
and the Minkowski question mark function restricted to rational inputs.
Everything is arbitrary-precision integer arithmetic; no floats.

The circle RP^1 is parameterized so that the question mark function
sends the nonnegative ray [0, ∞] onto [0, 1/2] and the negative ray
[-∞, 0] onto [1/2, 1].  The two formal infinities 1/0 and -1/0 compare
equal as points but keep their spelling for interval bookkeeping.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class MediantUndefinedError(ValueError):
    """Mediant would be 0/0 (the two fractions are formal negatives)."""


class NotDyadicError(ValueError):
    pass


class RangeError(ValueError):
    pass


@dataclass(frozen=True)
class ExtRational:
    """Point of the rational projective line in lowest terms.

    den == 0 only for the two formal spellings 1/0 and -1/0.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise ValueError("denominator must be nonnegative: %r" % (self,))
        if self.den == 0 and self.num not in (1, -1):
            raise ValueError("infinity must be spelled 1/0 or -1/0")
        if self.den != 0 and gcd(abs(self.num), self.den) != 1:
            raise ValueError("fraction not in lowest terms: %d/%d" % (self.num, self.den))

    @classmethod
    def make(cls, num: int, den: int) -> "ExtRational":
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a point of RP^1")
        if den < 0:
            num, den = -num, -den
        if den == 0:
            return cls(1 if num > 0 else -1, 0)
        g = gcd(abs(num), den)
        return cls(num // g, den // g)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("infinity has no Fraction value")
        return Fraction(self.num, self.den)

    def __eq__(self, other) -> bool:
        # point equality: 1/0 == -1/0
        if not isinstance(other, ExtRational):
            return NotImplemented
        if self.is_infinite and other.is_infinite:
            return True
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_infinite:
            return hash("oo")
        return hash((self.num, self.den))

    def __lt__(self, other: "ExtRational") -> bool:
        # real-line order with -1/0 = -inf and 1/0 = +inf;
        # the two infinities compare equal (neither is less)
        if self.is_infinite and other.is_infinite:
            return False
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "ExtRational") -> bool:
        return self == other or self < other

    def __neg__(self) -> "ExtRational":
        return ExtRational.make(-self.num, self.den)

    def __str__(self) -> str:
        return "%d/%d" % (self.num, self.den)


ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)
INF = ExtRational(1, 0)
NEG_INF = ExtRational(-1, 0)

_EXT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_ext_rational(text: str) -> ExtRational:
    m = _EXT_RE.match(text.strip())
    if not m:
        raise ValueError("cannot parse extended rational %r (expected p/q)" % text)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if num == 0 and den == 0:
        raise ValueError("0/0 is not a point of RP^1")
    x = ExtRational.make(num, den)
    if (x.num, x.den) != (num, den):
        raise ValueError("non-canonical fraction %r (did you mean %s?)" % (text, x))
    return x


@dataclass(frozen=True)
class Dyadic:
    """Exact dyadic rational num / 2^exp, with num odd unless exp == 0."""

    num: int
    exp: int

    def __post_init__(self):
        if self.exp < 0:
            raise ValueError("exponent must be nonnegative")
        if self.exp > 0 and self.num % 2 == 0:
            raise ValueError("non-canonical dyadic %d/2^%d" % (self.num, self.exp))

    @classmethod
    def make(cls, num: int, exp: int) -> "Dyadic":
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        return cls(num, exp)

    @classmethod
    def from_fraction(cls, q) -> "Dyadic":
        q = Fraction(q)
        e = q.denominator.bit_length() - 1
        if q.denominator != 1 << e:
            raise NotDyadicError("%s is not dyadic" % q)
        return cls(q.numerator, e)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __lt__(self, other: "Dyadic") -> bool:
        return self.as_fraction() < other.as_fraction()

    def __le__(self, other: "Dyadic") -> bool:
        return self.as_fraction() <= other.as_fraction()

    def __add__(self, other: "Dyadic") -> "Dyadic":
        return Dyadic.from_fraction(self.as_fraction() + other.as_fraction())

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        return Dyadic.from_fraction(self.as_fraction() - other.as_fraction())

    def __str__(self) -> str:
        return "%d/%d" % (self.num, 1 << self.exp)


_DYADIC_RE = re.compile(r"^(-?\d+)(?:/(\d+)|/2\^(\d+))?$")


def parse_dyadic(text: str) -> Dyadic:
    m = _DYADIC_RE.match(text.strip())
    if not m:
        raise ValueError("cannot parse dyadic %r" % text)
    num = int(m.group(1))
    if m.group(3) is not None:
        exp = int(m.group(3))
        d = Dyadic.make(num, exp)
        if (d.num, d.exp) != (num, exp):
            raise ValueError("non-canonical dyadic %r (did you mean %s?)" % (text, d))
        return d
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den <= 0:
        raise ValueError("dyadic denominator must be positive: %r" % text)
    e = den.bit_length() - 1
    if den != 1 << e:
        raise NotDyadicError("%r: denominator is not a power of two" % text)
    d = Dyadic.make(num, e)
    if d.as_fraction() != Fraction(num, den):
        raise AssertionError
    if (1 << d.exp) != den:
        raise ValueError("non-canonical dyadic %r (did you mean %s?)" % (text, d))
    return d


def mediant(x: ExtRational, y: ExtRational) -> ExtRational:
    num = x.num + y.num
    den = x.den + y.den
    if num == 0 and den == 0:
        raise MediantUndefinedError("mediant of %s and %s is 0/0" % (x, y))
    return ExtRational.make(num, den)


def is_farey_pair(x: ExtRational, y: ExtRational) -> bool:
    return abs(x.num * y.den - x.den * y.num) == 1


@dataclass(frozen=True)
class FareyInterval:
    lo: ExtRational
    hi: ExtRational

    def __post_init__(self):
        if not is_farey_pair(self.lo, self.hi):
            raise ValueError("%s, %s is not a Farey pair" % (self.lo, self.hi))


def _question_fraction(x: ExtRational) -> Fraction:
    """?(x) as an exact Fraction in [0, 1) (dyadic by construction)."""
    if x == ZERO:
        return Fraction(0)
    if x.is_infinite:
        return Fraction(1, 2)
    if x.num > 0:
        lo, hi = ZERO, INF
        vlo, vhi = Fraction(0), Fraction(1, 2)
    else:
        lo, hi = NEG_INF, ZERO
        vlo, vhi = Fraction(1, 2), Fraction(1)
    while True:
        mid = mediant(lo, hi)
        vmid = (vlo + vhi) / 2
        if x == mid:
            return vmid
        if x < mid:
            hi, vhi = mid, vmid
        else:
            lo, vlo = mid, vmid


def minkowski_q(x: ExtRational) -> Dyadic:
    """Minkowski question mark of a rational point, exactly.

    Values lie in [0, 1): ?(0) = 0, ?(∞) = 1/2, ?(-1) = 3/4.  The wrap
    value 1 for 0 approached from below only appears in interval
    endpoint bookkeeping, never as the image of a point.
    """
    return Dyadic.from_fraction(_question_fraction(x))


def minkowski_inv(d: Dyadic) -> ExtRational:
    """Exact inverse of minkowski_q on [0, 1)."""
    v = d.as_fraction()
    return _question_inv_fraction(v)


def _question_inv_fraction(v: Fraction) -> ExtRational:
    if v < 0 or v >= 1:
        raise RangeError("argument %s outside [0, 1)" % v)
    if v == 0:
        return ZERO
    if v == Fraction(1, 2):
        return INF
    if v < Fraction(1, 2):
        lo, hi = ZERO, INF
        vlo, vhi = Fraction(0), Fraction(1, 2)
    else:
        lo, hi = NEG_INF, ZERO
        vlo, vhi = Fraction(1, 2), Fraction(1)
    while True:
        mid = mediant(lo, hi)
        vmid = (vlo + vhi) / 2
        if v == vmid:
            return mid
        if v < vmid:
            hi, vhi = mid, vmid
        else:
            lo, vlo = mid, vmid


def circle_position(x: ExtRational) -> Fraction:
    """Position of x on the circle in [0, 1), via the question mark.

    Strictly increasing along the cyclic order 0 < 1 < ∞ < -1 < 0(wrap),
    so it linearizes circle comparisons exactly.
    """
    return _question_fraction(x)
