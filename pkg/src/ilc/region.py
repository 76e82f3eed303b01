"""Symmetric sequences as points of R^m and the infinite log-concavity region.

A point ``(a_1, ..., a_m)`` stands for the symmetric sequence with
``a_0 = a_n = 1`` where ``n = 2m`` (even parity) or ``n = 2m + 1`` (odd).
Membership is decided through the inequalities the region guarantees,
not by solving for the hypersurface parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InvalidInput
from .exactnum import R1, r0_factor_holds, surd_le

EVEN = "even"
ODD = "odd"

# rational upper bound for (1 + sqrt 5)/2; 1.618034 > 1.6180339887...
R1_UPPER = Fraction(1618034, 1000000)


@dataclass(frozen=True)
class RegionParams:
    """Hypersurface parameters ``x >= 1`` and ``1 = d_1 > d_2 > ... > 0``."""

    m: int
    parity: str
    x: Fraction
    d: tuple[Fraction, ...]

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInput("m must be >= 1")
        _check_parity(self.parity)
        if Fraction(self.x) < 1:
            raise InvalidInput("x must be >= 1")
        d = tuple(Fraction(v) for v in self.d)
        if not d or d[0] != 1:
            raise InvalidInput("d must start with d_1 = 1")
        if any(not a > b for a, b in zip(d, d[1:])) or d[-1] <= 0:
            raise InvalidInput("d must be strictly decreasing and positive")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "x", Fraction(self.x))

    @property
    def partial_sums(self) -> tuple[Fraction, ...]:
        out, acc = [], Fraction(0)
        for v in self.d:
            acc += v
            out.append(acc)
        return tuple(out)


def _check_coords(coords):
    if any(c <= 0 for c in coords):
        raise InvalidInput("coordinates must be positive")


def _check_parity(parity: str):
    if parity not in (EVEN, ODD):
        raise InvalidInput(f"unknown parity {parity!r}")


def in_region(coords, parity: str) -> bool:
    _check_parity(parity)
    coords = tuple(Fraction(c) for c in coords)
    _check_coords(coords)
    m = len(coords)
    a = (Fraction(1),) + coords
    if any(not a[i] < a[i + 1] for i in range(m)):
        return False
    for k in range(1, m):
        if not r0_factor_holds(a[k - 1], a[k], a[k + 1]):
            return False
    if parity == EVEN:
        return surd_le(R1, a[m - 1], a[m])
    return a[m] >= 2 * a[m - 1]


def point_to_sequence(coords, parity: str) -> tuple:
    _check_parity(parity)
    coords = tuple(Fraction(c) for c in coords)
    _check_coords(coords)
    half = (Fraction(1),) + coords
    if parity == EVEN:
        return half + half[-2::-1]
    return half + half[::-1]


def _integral_exponents(values, denominator: int) -> tuple[int, tuple[int, ...]]:
    scaled = tuple(Fraction(v) * denominator for v in values)
    if any(v.denominator != 1 for v in scaled):
        raise InvalidInput(f"exponents are not integral with denominator {denominator}")
    return denominator, tuple(int(v) for v in scaled)


def sample_near_hypersurface(params: RegionParams, k: int, bump=1,
                             denominator: int | None = None,
                             r1_upper: Fraction = R1_UPPER) -> tuple[Fraction, ...]:
    """A point of the k-th hypersurface with its k-th coordinate scaled by ``bump``.

    Exponents ``s_j`` are multiplied by a common ``denominator`` so that the
    base ``x`` (read as ``x**(1/denominator)`` of the original surface) gives
    rational coordinates. The irrational factor is replaced by ``r1_upper``,
    which pushes the point to the correct side.
    """
    m = params.m
    if not 1 <= k <= m:
        raise InvalidInput("k must satisfy 1 <= k <= m")
    if Fraction(bump) < 1:
        raise InvalidInput("bump must be >= 1")
    if r1_upper * r1_upper < 1 + r1_upper:
        raise InvalidInput("r1_upper is below (1 + sqrt 5)/2")
    s = params.partial_sums
    x = params.x
    if denominator is None:
        denominator = lcm(*(v.denominator for v in params.d))
    if k < m:
        if len(params.d) < m:
            raise InvalidInput(f"H_{k} needs d_1..d_{m}")
        shift = params.d[k - 1] - params.d[k]
        exps = list(s[:k]) + [s[j] + shift for j in range(k, m)]
        _, e = _integral_exponents(exps, denominator)
        coords = [x ** ej for ej in e]
        coords[k - 1] *= r1_upper
    else:
        if len(params.d) < m - 1:
            raise InvalidInput(f"H_{m} needs d_1..d_{m - 1}")
        exps = [Fraction(0)] + list(s[:m - 1])
        _, e = _integral_exponents(exps, denominator)
        coords = [x ** ej for ej in e[1:]]
        c = r1_upper if params.parity == EVEN else Fraction(2)
        coords.append(c * x ** e[m - 1])
    coords[k - 1] *= Fraction(bump)
    return tuple(coords)
