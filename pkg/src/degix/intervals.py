"""Certified interval arithmetic on arbitrary-precision floats.

Every numeric quantity this package derives from a graph (index values,
per-edge terms, polynomial bounds) is an ``Interval``: a closed enclosure
``[lo, hi]`` whose endpoints are MPFR numbers computed with outward
(directed) rounding.  The mathematically exact value is guaranteed to lie
inside the enclosure; this is a hard invariant, not a heuristic.  Sign
questions are answered only when the enclosure excludes zero, and callers
escalate the working precision along ``precision_ladder`` when it does not.

Endpoints carry a few guard bits beyond the stated precision so that
enclosures of short radical expressions stay well within one part in
``2**(precision - 1)`` of the true value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq, mpz

GUARD_BITS = 8
DEFAULT_PRECISION = 64
PRECISION_LADDER = (64, 128, 256, 512)
DEFAULT_MAX_PRECISION = PRECISION_LADDER[-1]

_DOWN_CTX: dict[int, "gmpy2.context"] = {}
_UP_CTX: dict[int, "gmpy2.context"] = {}

Number = int | float | Fraction | mpz | mpq | mpfr


def _down(bits: int):
    ctx = _DOWN_CTX.get(bits)
    if ctx is None:
        ctx = gmpy2.context(precision=bits, round=gmpy2.RoundDown)
        _DOWN_CTX[bits] = ctx
    return ctx


def _up(bits: int):
    ctx = _UP_CTX.get(bits)
    if ctx is None:
        ctx = gmpy2.context(precision=bits, round=gmpy2.RoundUp)
        _UP_CTX[bits] = ctx
    return ctx


def _coerce(value: Number):
    """Convert to an exact gmpy2 number (no rounding)."""
    if isinstance(value, (mpz, mpq, mpfr)):
        return value
    if isinstance(value, int):
        return mpz(value)
    if isinstance(value, float):
        return mpq(*value.as_integer_ratio())
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact number")


def precision_ladder(max_precision: int, start: int = DEFAULT_PRECISION) -> list[int]:
    """Escalation schedule: start, 2*start, 4*start, ... capped at max_precision."""
    if max_precision < 2:
        raise ValueError(f"max_precision must be >= 2, got {max_precision}")
    if max_precision <= start:
        return [max_precision]
    rungs = []
    p = start
    while p < max_precision:
        rungs.append(p)
        p *= 2
    rungs.append(max_precision)
    return rungs


@dataclass(frozen=True)
class Interval:
    """Closed enclosure [lo, hi] of a real value at a stated precision.

    ``precision`` is the precision the enclosure was requested at; the
    endpoints themselves carry ``precision + GUARD_BITS`` working bits.
    """

    lo: mpfr
    hi: mpfr
    precision: int

    def __post_init__(self):
        if gmpy2.is_nan(self.lo) or gmpy2.is_nan(self.hi):
            raise ValueError("interval endpoint is NaN")
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def exact(value: Number, precision: int = DEFAULT_PRECISION) -> "Interval":
        """Tightest enclosure of an exactly-known number."""
        v = _coerce(value)
        work = precision + GUARD_BITS
        # anchor on an mpfr so exact mpz/mpq inputs are rounded directionally
        # (gmpy2 keeps all-rational arithmetic exact and ignores the context)
        zero = mpfr(0)
        return Interval(_down(work).add(zero, v), _up(work).add(zero, v), precision)

    @staticmethod
    def ratio(num: int, den: int, precision: int = DEFAULT_PRECISION) -> "Interval":
        """Enclosure of the exact rational num/den."""
        if den == 0:
            raise ZeroDivisionError("ratio with zero denominator")
        return Interval.exact(Fraction(num, den), precision)

    @staticmethod
    def zero(precision: int = DEFAULT_PRECISION) -> "Interval":
        return Interval.exact(0, precision)

    # -- arithmetic --------------------------------------------------------

    def _work(self, other: "Interval | None" = None) -> tuple[int, int]:
        stated = self.precision if other is None else max(self.precision, other.precision)
        return stated, stated + GUARD_BITS

    def __add__(self, other: "Interval") -> "Interval":
        stated, work = self._work(other)
        return Interval(_down(work).add(self.lo, other.lo),
                        _up(work).add(self.hi, other.hi), stated)

    def __sub__(self, other: "Interval") -> "Interval":
        stated, work = self._work(other)
        return Interval(_down(work).sub(self.lo, other.hi),
                        _up(work).sub(self.hi, other.lo), stated)

    def __neg__(self) -> "Interval":
        ctx = _down(self.precision + GUARD_BITS)  # sign flip is exact at full width
        return Interval(ctx.minus(self.hi), ctx.minus(self.lo), self.precision)

    def __mul__(self, other: "Interval") -> "Interval":
        stated, work = self._work(other)
        dn, up = _down(work), _up(work)
        pairs = ((self.lo, other.lo), (self.lo, other.hi),
                 (self.hi, other.lo), (self.hi, other.hi))
        return Interval(min(dn.mul(a, b) for a, b in pairs),
                        max(up.mul(a, b) for a, b in pairs), stated)

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("divisor interval contains zero")
        stated, work = self._work(other)
        dn, up = _down(work), _up(work)
        pairs = ((self.lo, other.lo), (self.lo, other.hi),
                 (self.hi, other.lo), (self.hi, other.hi))
        return Interval(min(dn.div(a, b) for a, b in pairs),
                        max(up.div(a, b) for a, b in pairs), stated)

    def sqrt(self) -> "Interval":
        if self.lo < 0:
            raise ValueError(f"sqrt of interval with negative endpoint {self.lo}")
        stated, work = self._work()
        return Interval(_down(work).sqrt(self.lo), _up(work).sqrt(self.hi), stated)

    def square(self) -> "Interval":
        """Tight enclosure of x**2 (tighter than self * self when 0 is inside)."""
        stated, work = self._work()
        dn, up = _down(work), _up(work)
        if self.lo >= 0:
            return Interval(dn.mul(self.lo, self.lo), up.mul(self.hi, self.hi), stated)
        if self.hi <= 0:
            return Interval(dn.mul(self.hi, self.hi), up.mul(self.lo, self.lo), stated)
        big = max(up.mul(self.lo, self.lo), up.mul(self.hi, self.hi))
        return Interval(mpfr(0), big, stated)

    def scaled(self, k: int) -> "Interval":
        """Enclosure of k * x for an integer scalar k."""
        stated, work = self._work()
        if k >= 0:
            return Interval(_down(work).mul(self.lo, k), _up(work).mul(self.hi, k), stated)
        return Interval(_down(work).mul(self.hi, k), _up(work).mul(self.lo, k), stated)

    # -- predicates and projections ---------------------------------------

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, value: Number) -> bool:
        v = _coerce(value)
        return self.lo <= v and v <= self.hi

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def lo_fraction(self) -> Fraction:
        return mpfr_to_fraction(self.lo)

    def hi_fraction(self) -> Fraction:
        return mpfr_to_fraction(self.hi)

    def midpoint(self) -> Fraction:
        return (self.lo_fraction() + self.hi_fraction()) / 2

    def width(self) -> Fraction:
        return self.hi_fraction() - self.lo_fraction()

    def __float__(self) -> float:
        return float(self.midpoint())

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Interval({self.lo!s}, {self.hi!s}, precision={self.precision})"


# Public alias: an index value is a certified enclosure.
CertifiedValue = Interval


def mpfr_to_fraction(x: mpfr) -> Fraction:
    """Exact rational value of an MPFR number."""
    if not gmpy2.is_finite(x):
        raise ValueError(f"cannot convert non-finite {x} to a fraction")
    q = mpq(x)
    return Fraction(int(q.numerator), int(q.denominator))


def decimal_str(value: Fraction | int, sig: int, direction: str = "down") -> str:
    """Decimal rendering of an exact rational with controlled rounding.

    ``direction`` is "down" (toward -inf) or "up" (toward +inf), so enclosure
    endpoints printed with the matching direction remain rigorous bounds;
    "nearest" (ties to even) is for display midpoints only.  The output is
    deterministic: plain notation for moderate exponents, otherwise
    scientific with a lowercase ``e``.
    """
    if direction not in ("down", "up", "nearest"):
        raise ValueError(f"unknown rounding direction {direction!r}")
    f = Fraction(value)
    if f == 0:
        return "0"
    neg = f < 0
    a = -f if neg else f
    # e = floor(log10(a)) by integer arithmetic
    if a >= 1:
        e = len(str(a.numerator // a.denominator)) - 1
    else:
        e = 0
        scaled = a
        while scaled < 1:
            scaled *= 10
            e -= 1
    shift = sig - 1 - e
    scaled = a * Fraction(10) ** shift
    num, den = scaled.numerator, scaled.denominator
    if direction == "nearest":
        floor_d = num // den
        rem = Fraction(num - floor_d * den, den)
        if rem > Fraction(1, 2) or (rem == Fraction(1, 2) and floor_d % 2 == 1):
            digits = floor_d + 1
        else:
            digits = floor_d
    else:
        # outward rounding of the magnitude depends on the sign
        magnitude_up = (direction == "up") != neg
        digits = -((-num) // den) if magnitude_up else num // den
    if digits >= 10 ** sig:  # carry overflowed into one more digit
        digits //= 10
        e += 1
    text = str(digits).rstrip("0") or "0"
    if -6 <= e <= 20:
        if e >= len(text) - 1:
            body = text + "0" * (e - len(text) + 1)
        elif e >= 0:
            body = text[: e + 1] + "." + text[e + 1 :]
        else:
            body = "0." + "0" * (-e - 1) + text
    else:
        mant = text[0] + ("." + text[1:] if len(text) > 1 else "")
        body = f"{mant}e{e:+d}"
    return ("-" + body) if neg else body


def interval_json(iv: Interval, sig: int = 17, mid_sig: int = 12) -> dict:
    """JSON-ready rendering: directed lo/hi bounds plus a display midpoint."""
    return {
        "lo": decimal_str(iv.lo_fraction(), sig, "down"),
        "hi": decimal_str(iv.hi_fraction(), sig, "up"),
        "mid": decimal_str(iv.midpoint(), mid_sig, "nearest"),
        "precision": iv.precision,
    }
