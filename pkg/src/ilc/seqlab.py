"""The L-operator on exact sequences, r0-factor certificates, and the
Pascal-triangle families they are run on.

A sequence is a tuple of ints or Fractions indexed ``0..n``; entries outside
that window are zero. ``l_step`` keeps the window fixed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

import gmpy2

from .certificate import CERTIFIED, INCONCLUSIVE, REFUTED, Certificate
from .errors import InvalidInput
from .exactnum import R0, _surd_le_int, r0_factor_holds

DEFAULT_MAX_DEPTH = 12

Seq = tuple


def l_step(s) -> Seq:
    """Return ``b_k = a_k^2 - a_{k-1} a_{k+1}`` over the same index window."""
    n = len(s)
    if n == 0:
        return ()
    if n == 1:
        return (s[0] * s[0],)
    out = [s[0] * s[0]]
    for k in range(1, n - 1):
        out.append(s[k] * s[k] - s[k - 1] * s[k + 1])
    out.append(s[-1] * s[-1])
    return tuple(out)


def is_nonneg(s, limit: int | None = None) -> tuple[bool, int | None]:
    """Check entries ``0..limit-1`` (default all); return the first negative index."""
    stop = len(s) if limit is None else min(limit, len(s))
    for i in range(stop):
        if s[i] < 0:
            return False, i
    return True, None


def is_log_concave(s) -> bool:
    return is_nonneg(l_step(s))[0]


def _is_integral(s) -> bool:
    return all(not isinstance(x, Fraction) or x.denominator == 1 for x in s)


def is_r0_factor(s) -> bool:
    """True iff ``a_k^2 >= r0 a_{k-1} a_{k+1}`` at every interior index."""
    if any(x < 0 for x in s):
        raise InvalidInput("r0-factor test needs a nonnegative sequence")
    if _is_integral(s):
        p, q = R0.p, R0.q
        for k in range(1, len(s) - 1):
            if not _surd_le_int(p, q, s[k - 1] * s[k + 1], s[k] * s[k]):
                return False
        return True
    return all(r0_factor_holds(s[k - 1], s[k], s[k + 1])
               for k in range(1, len(s) - 1))


def clear_denominators(s) -> Seq:
    """Scale by the lcm of denominators; positive scaling commutes with the
    tests used here (L(c a) = c^2 L(a))."""
    d = 1
    for x in s:
        if isinstance(x, Fraction):
            d = lcm(d, x.denominator)
    return tuple(int(x * d) for x in s)


def certify_infinite_lc(s, max_depth: int = DEFAULT_MAX_DEPTH, target: str = "",
                        truncated: bool = False) -> Certificate:
    """Iterate the L-operator until a level is r0-factor log-concave.

    Each level is first checked for nonnegativity (a negative entry refutes).
    With ``truncated=True`` the input is taken as a prefix of an infinite
    sequence: level ``i`` is only trusted on its first ``len(s) - i`` entries
    and the result can never be ``certified``.
    """
    start = time.perf_counter()
    cur = tuple(gmpy2.mpz(x) for x in clear_denominators(s))
    level = 0
    while True:
        valid = len(cur) - level if truncated else len(cur)
        if truncated and valid <= 0:
            break
        ok, idx = is_nonneg(cur, valid)
        if not ok:
            return Certificate(target, REFUTED, depth=level, failure_index=(level, idx),
                               elapsed=time.perf_counter() - start,
                               details={"value": int(cur[idx])})
        if not truncated and is_r0_factor(cur):
            return Certificate(target, CERTIFIED, depth=level, r0_level=level,
                               elapsed=time.perf_counter() - start)
        if level >= max_depth:
            break
        cur = l_step(cur)
        level += 1
    return Certificate(target, INCONCLUSIVE, depth=level,
                       elapsed=time.perf_counter() - start)


def certify_symmetric_odd(s, target: str = "") -> Certificate:
    """Apply the odd-length symmetric criterion.

    For ``a_0..a_{2m+1}`` symmetric and nonnegative, r0-factor at every
    ``k < m`` together with ``a_m >= 2 a_{m-1}`` is preserved by L. The
    criterion is only sufficient, so failure yields ``inconclusive``.
    """
    n = len(s)
    if n % 2 or n < 2:
        raise InvalidInput("need an even number of entries (indices 0..2m+1)")
    if any(s[i] != s[n - 1 - i] for i in range(n)):
        raise InvalidInput("sequence is not symmetric")
    if any(x < 0 for x in s):
        raise InvalidInput("sequence must be nonnegative")
    m = (n - 2) // 2
    for k in range(1, m):
        if not r0_factor_holds(s[k - 1], s[k], s[k + 1]):
            return Certificate(target, INCONCLUSIVE, details={"failed": "r0-factor", "index": k})
    if m >= 1 and s[m] < 2 * s[m - 1]:
        return Certificate(target, INCONCLUSIVE, details={"failed": "middle", "index": m})
    return Certificate(target, CERTIFIED, r0_level=0)


@dataclass(frozen=True)
class LineSpec:
    """The line ``binom(n + m*u, m*v)`` for ``m = 0..length-1``."""

    n: int
    u: int
    v: int
    length: int

    def __post_init__(self):
        if min(self.n, self.u, self.v, self.length) < 0:
            raise InvalidInput("line parameters must be nonnegative")
        if self.u == 0 and self.v == 0:
            raise InvalidInput("u and v cannot both be zero")


def line_support(n: int, u: int, v: int) -> int | None:
    """Number of nonzero terms of the line, or None if it is infinite."""
    if v <= u:
        return None
    return n // (v - u) + 1


def pascal_line(spec: LineSpec) -> Seq:
    # math.comb already returns 0 when mv > n + mu
    return tuple(comb(spec.n + m * spec.u, m * spec.v) for m in range(spec.length))


def finite_line(n: int, u: int, v: int) -> Seq:
    length = line_support(n, u, v)
    if length is None:
        raise InvalidInput("line is infinite for v <= u")
    return pascal_line(LineSpec(n, u, v, length))


def pascal_row(n: int) -> Seq:
    return tuple(comb(n, k) for k in range(n + 1))


def pascal_column(k: int, last_n: int) -> Seq:
    """``binom(n, k)`` for ``n = k..last_n``."""
    return tuple(comb(n, k) for n in range(k, last_n + 1))


def column_closed_forms(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Closed forms for the first and second L-iterates of column ``k`` at ``n``."""
    if n < 2:
        raise InvalidInput("closed forms need n >= 2")
    if k < 2:
        raise InvalidInput("closed forms need k >= 2")
    first = Fraction(comb(n, k) * comb(n, k - 1), n)
    second = Fraction(2 * comb(n, k) ** 2 * comb(n, k - 1) * comb(n, k - 2),
                      n * n * (n - 1))
    return first, second


def l3_positivity_poly(k: int, n: int) -> int:
    """The polynomial carrying the sign of the third L-iterate of column ``k``."""
    return (4 * k - 6) * n * n - (4 * k * k - 10 * k + 6) * n - k * k


def boros_moll_coeffs(m: int) -> Seq:
    """Coefficients ``d_l(m)``, ``l = 0..m``, of the Boros-Moll polynomial."""
    if m < 0:
        raise InvalidInput("m must be nonnegative")
    out = []
    for ell in range(m + 1):
        total = Fraction(0)
        for j in range(ell, m + 1):
            total += (Fraction(2) ** (j - 2 * m) * comb(2 * m - 2 * j, m - j)
                      * comb(m + j, m) * comb(j, ell))
        out.append(total)
    return tuple(out)


def vandermonde_refute(u: int, v: int) -> bool:
    """For ``u > v >= 1``: log-concavity of the ``n = 0`` line fails at its
    second term, i.e. ``binom(u, v)^2 < binom(2u, 2v)``."""
    if not u > v >= 1:
        raise InvalidInput("need u > v >= 1")
    return comb(u, v) ** 2 < comb(2 * u, 2 * v)
