"""Exact comparisons against the quadratic surds (p + q*sqrt(5))/2.

Only two thresholds matter here: ``R0 = (3+sqrt 5)/2``, the factor that the
L-operator preserves, and ``R1 = (1+sqrt 5)/2`` with ``R1**2 == R0``.
Everything is decided in integer arithmetic; no floats touch the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import InvalidInput


@dataclass(frozen=True)
class SurdThreshold:
    """The real number (p + q*sqrt(5)) / 2."""

    p: int
    q: int

    def __mul__(self, other: SurdThreshold) -> SurdThreshold:
        # (p1 + q1 r)(p2 + q2 r)/4 with r^2 = 5, rescaled to a /2 form
        num_p = self.p * other.p + 5 * self.q * other.q
        num_q = self.p * other.q + self.q * other.p
        if num_p % 2 or num_q % 2:
            raise InvalidInput("product is not a half-integer surd")
        return SurdThreshold(num_p // 2, num_q // 2)

    def __float__(self) -> float:
        return (self.p + self.q * 5 ** 0.5) / 2


R0 = SurdThreshold(3, 1)
R1 = SurdThreshold(1, 1)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _surd_le_int(p: int, q: int, b: int, a: int) -> bool:
    # a >= (p + q sqrt5)/2 * b  <=>  2a - p b >= q b sqrt5
    x = 2 * a - p * b
    y = q * b
    if y == 0:
        return x >= 0
    if y > 0:
        return x >= 0 and x * x >= 5 * y * y
    return x >= 0 or x * x <= 5 * y * y


def surd_le(t: SurdThreshold, b, a) -> bool:
    """Return ``a >= t * b`` decided exactly; ``b`` must be nonnegative.

    Both arguments may be ints or Fractions. Equality counts as success.
    """
    if isinstance(a, int) and isinstance(b, int):
        if b < 0:
            raise InvalidInput("surd_le requires b >= 0")
        if b == 0:
            return a >= 0
        return _surd_le_int(t.p, t.q, b, a)
    fa, fb = _as_fraction(a), _as_fraction(b)
    if fb < 0:
        raise InvalidInput("surd_le requires b >= 0")
    if fb == 0:
        return fa >= 0
    # scale both sides by the (positive) product of denominators
    return _surd_le_int(t.p, t.q, fb.numerator * fa.denominator,
                        fa.numerator * fb.denominator)


def r0_factor_holds(a_prev, a, a_next) -> bool:
    """``a**2 >= R0 * a_prev * a_next`` for nonnegative inputs."""
    if a_prev < 0 or a < 0 or a_next < 0:
        raise InvalidInput("r0-factor test needs nonnegative entries")
    return surd_le(R0, a_prev * a_next, a * a)
