"""Gaussian and quantum binomial coefficients and q-log-concavity certificates."""

from __future__ import annotations

import time
from functools import lru_cache
from math import comb

from .certificate import CERTIFIED, INCONCLUSIVE, REFUTED, Certificate
from .errors import InvalidInput, ResourceLimit
from .exactnum import R0, _surd_le_int
from .lpoly import LPoly, is_q_nonneg, lp_mul, mint, q_integer

PARTITION_GUARD = 10 ** 6
ZERO = LPoly()
ONE = LPoly((1,))


@lru_cache(maxsize=None)
def _gauss_coeffs(n: int, k: int) -> tuple[int, ...]:
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    if k == 0 or k == n:
        return (1,)
    a = _gauss_coeffs(n - 1, k - 1)
    b = _gauss_coeffs(n - 1, k) if k <= n - 1 else ()
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return tuple(out)


def gauss_binom(n: int, k: int) -> LPoly:
    """The Gaussian polynomial ``[n, k]``; zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    return LPoly(_gauss_coeffs(n, k))


def gauss_partition_oracle(n: int, k: int) -> LPoly:
    """``[n, k]`` as the size generating function of partitions in an
    ``(n-k) x k`` box, by explicit enumeration."""
    if k < 0 or k > n:
        return ZERO
    if comb(n, k) > PARTITION_GUARD:
        raise ResourceLimit(f"{comb(n, k)} partitions exceed the enumeration guard")
    counts: dict[int, int] = {}

    def walk(parts_left: int, max_part: int, size: int):
        counts[size] = counts.get(size, 0) + 1
        if parts_left == 0:
            return
        for p in range(1, max_part + 1):
            walk(parts_left - 1, p, size + p)

    walk(n - k, k, 0)
    return LPoly.from_dict(counts)


def quantum_binom(n: int, k: int) -> LPoly:
    """The quantum binomial, ``[n, k]`` at ``q**2`` divided by ``q**(nk - k^2)``."""
    g = gauss_binom(n, k)
    if g.is_zero():
        return g
    return g.substitute_power(2).shift(-(n * k - k * k))


def quantum_integer(n: int) -> LPoly:
    """``q^(1-n) + q^(3-n) + ... + q^(n-1)``."""
    return quantum_binom(n, 1)


def _products(s):
    """Squares ``f_k^2`` and neighbour products ``f_{k-1} f_{k+1}``."""
    n = len(s)
    squares = [lp_mul(f, f) for f in s]
    neighbours = [lp_mul(s[k - 1], s[k + 1]) if 0 < k < n - 1 else ZERO for k in range(n)]
    return squares, neighbours


def ql_step(s) -> tuple[LPoly, ...]:
    squares, neighbours = _products(s)
    return tuple(a - b for a, b in zip(squares, neighbours))


def _dominates_r0(big: LPoly, small: LPoly) -> bool:
    # coefficientwise big >= r0 * small
    p, q = R0.p, R0.q
    if small.is_zero():
        return True
    if big.is_zero():
        return False
    for i, c in enumerate(small.coeffs):
        if c and not _surd_le_int(p, q, c, big.coeff(small.min_exp + i)):
            return False
    return True


def is_q_r0_factor(s) -> bool:
    """Coefficientwise ``f_k^2 >= r0 f_{k-1} f_{k+1}`` at every index."""
    for f in s:
        if not is_q_nonneg(f)[0]:
            raise InvalidInput("r0-factor test needs q-nonnegative entries")
    squares, neighbours = _products(s)
    return all(_dominates_r0(a, b) for a, b in zip(squares, neighbours))


def _first_negative(s, valid: int):
    for pos in range(valid):
        ok, exp = is_q_nonneg(s[pos])
        if not ok:
            return pos, exp
    return None


def certify_q_infinite_lc(s, max_depth: int = 12, target: str = "",
                          truncated: bool = False) -> Certificate:
    """The q-analogue of ``seqlab.certify_infinite_lc``.

    A refutation records the failing entry's least term (its ``mint``) and
    the least exponent carrying a negative coefficient.
    """
    start = time.perf_counter()
    cur = tuple(s)
    level = 0
    while True:
        valid = len(cur) - level if truncated else len(cur)
        if truncated and valid <= 0:
            break
        bad = _first_negative(cur, valid)
        if bad is not None:
            pos, exp = bad
            c, e = mint(cur[pos])
            return Certificate(target, REFUTED, depth=level, failure_index=(level, pos),
                               elapsed=time.perf_counter() - start,
                               details={"mint_coeff": c, "mint_exp": e,
                                        "first_negative_exp": exp,
                                        "first_negative_coeff": cur[pos].coeff(exp)})
        squares, neighbours = _products(cur)
        if not truncated and all(_dominates_r0(a, b) for a, b in zip(squares, neighbours)):
            return Certificate(target, CERTIFIED, depth=level, r0_level=level,
                               elapsed=time.perf_counter() - start)
        if level >= max_depth:
            break
        cur = tuple(a - b for a, b in zip(squares, neighbours))
        level += 1
    return Certificate(target, INCONCLUSIVE, depth=level, elapsed=time.perf_counter() - start)


def gauss_row(n: int) -> tuple[LPoly, ...]:
    return tuple(gauss_binom(n, k) for k in range(n + 1))


def quantum_row(n: int) -> tuple[LPoly, ...]:
    return tuple(quantum_binom(n, k) for k in range(n + 1))


def gauss_column(k: int, last_n: int) -> tuple[LPoly, ...]:
    return tuple(gauss_binom(n, k) for n in range(k, last_n + 1))


def q_line(binom, n: int, u: int, v: int, length: int) -> tuple[LPoly, ...]:
    """``binom(n + m u, m v)`` for ``m = 0..length-1`` (``binom`` is
    ``gauss_binom`` or ``quantum_binom``)."""
    return tuple(binom(n + m * u, m * v) for m in range(length))


def column_l(binom, n: int, k: int) -> LPoly:
    """First L-iterate of the column ``(binom(m, k))_m`` at ``m = n``."""
    return lp_mul(binom(n, k), binom(n, k)) - lp_mul(binom(n - 1, k), binom(n + 1, k))


def column_l2(binom, n: int, k: int) -> LPoly:
    mid = column_l(binom, n, k)
    return lp_mul(mid, mid) - lp_mul(column_l(binom, n - 1, k), column_l(binom, n + 1, k))


def q_narayana_check(n: int, k: int) -> bool:
    """``[n] * L_n[n, k] == q^(n-k) [n, k] [n, k-1]`` as polynomials."""
    if n < 1 or k < 1:
        raise InvalidInput("need n, k >= 1")
    lhs = lp_mul(q_integer(n), column_l(gauss_binom, n, k))
    rhs = lp_mul(gauss_binom(n, k), gauss_binom(n, k - 1)).shift(n - k)
    return lhs == rhs


def llq_resolver(n: int, k: int) -> dict:
    """Compare the second column L-iterate against both readings of its
    closed form: the last factor ``[n, k-1]`` as printed, or ``[n, k-2]``
    (the reading that agrees with the integer case at ``q = 1``).

    Both are checked after multiplying through by ``[n]^2 [n-1]``.
    """
    if n < 2 or k < 2:
        raise InvalidInput("need n, k >= 2")
    direct = column_l2(gauss_binom, n, k)
    lhs = lp_mul(lp_mul(q_integer(n), q_integer(n)), lp_mul(q_integer(n - 1), direct))
    common = lp_mul(q_integer(2), lp_mul(gauss_binom(n, k) ** 2, gauss_binom(n, k - 1)))
    common = common.shift(3 * n - 3 * k)
    literal = lp_mul(common, gauss_binom(n, k - 1))
    corrected = lp_mul(common, gauss_binom(n, k - 2))
    # integer check of the q = 1 closed form, cleared of its denominator
    at_one = direct.at_one() * n * n * (n - 1)
    closed = 2 * comb(n, k) ** 2 * comb(n, k - 1) * comb(n, k - 2)
    return {"n": n, "k": k, "literal": lhs == literal, "corrected": lhs == corrected,
            "q_equals_1": at_one == closed}


def l_column2_closed(n: int, i: int) -> LPoly:
    """``q^((2^i - 1)(n - 2)) [n, 2]``."""
    return gauss_binom(n, 2).shift((2 ** i - 1) * (n - 2))


def gauss_top_coefficient(n: int, u: int, v: int) -> int:
    """Top coefficient of ``[n+u, v]^2 - [n+2u, 2v]``."""
    d = lp_mul(gauss_binom(n + u, v), gauss_binom(n + u, v)) - gauss_binom(n + 2 * u, 2 * v)
    return d.coeffs[-1]


def quantum_bottom_coefficient(n: int, u: int, v: int) -> int:
    """Lowest coefficient of ``<n+u, v>^2 - <n+2u, 2v>``."""
    d = lp_mul(quantum_binom(n + u, v), quantum_binom(n + u, v)) - quantum_binom(n + 2 * u, 2 * v)
    return d.coeffs[0]
