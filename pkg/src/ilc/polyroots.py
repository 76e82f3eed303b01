"""Real-rootedness of integer polynomials via Sturm chains."""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import gcd

from .certificate import CERTIFIED, INCONCLUSIVE, REFUTED, Certificate
from .errors import InvalidInput
from .seqlab import clear_denominators, l_step

# coefficient lists are low degree first; the zero polynomial is []


def _trim(c) -> list[int]:
    c = [int(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return c


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_trim(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def poly_from_seq(s) -> IntPoly:
    """``a_0 + a_1 x + ... + a_n x^n``, scaled to integer coefficients."""
    return IntPoly(clear_denominators(s))


def poly_from_roots(roots) -> list[Fraction]:
    """Coefficients of ``prod(x + r)`` for the given ``r``."""
    c = [Fraction(1)]
    for r in roots:
        r = Fraction(r)
        nxt = [Fraction(0)] * (len(c) + 1)
        for i, v in enumerate(c):
            nxt[i] += v * r
            nxt[i + 1] += v
        c = nxt
    return c


def _content(c) -> int:
    g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(c) -> list[int]:
    if not c:
        return []
    g = _content(c)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def _derivative(c) -> list[int]:
    return [i * c[i] for i in range(1, len(c))]


def _prem(a, b) -> list[int]:
    """Remainder of ``lc(b)^(deg a - deg b + 1) * a`` by ``b``, made positive multiple."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    delta = len(a) - len(b) + 1
    if delta <= 0:
        return a
    for _ in range(delta):
        if len(a) - 1 < db:
            a = [x * lb for x in a]
            continue
        lead = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[i + shift] -= lead * y
        a = _trim(a)
    if lb < 0 and delta % 2:
        a = [-x for x in a]
    return _trim(a)


def _gcd(a, b) -> list[int]:
    a, b = _primitive(_trim(a)), _primitive(_trim(b))
    while b:
        a, b = b, _primitive(_prem(a, b))
    return a


def _exact_div(a, b) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        num = a[i + len(b) - 1]
        if num % b[-1]:
            raise ArithmeticError("division is not exact")
        q[i] = num // b[-1]
        for j, y in enumerate(b):
            a[i + j] -= q[i] * y
    if any(a):
        raise ArithmeticError("division is not exact")
    return q


def squarefree_part(p: IntPoly) -> IntPoly:
    """``p / gcd(p, p')``, primitive with positive leading coefficient."""
    if p.is_zero():
        raise InvalidInput("zero polynomial")
    c = list(p.coeffs)
    if len(c) == 1:
        return IntPoly([1])
    g = _gcd(c, _derivative(c))
    return IntPoly(_primitive(_exact_div(_primitive(c), g)))


def sturm_chain(p: IntPoly) -> list[list[int]]:
    chain = [_primitive(list(p.coeffs))]
    if len(chain[0]) > 1:
        chain.append(_primitive(_derivative(chain[0])))
    while len(chain[-1]) > 1:
        r = _prem(chain[-2], chain[-1])
        if not r:
            break
        # keep each member a positive multiple of -rem
        chain.append([-x // abs(_content(r)) for x in r])
    return chain


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _var_at_inf(chain, negative: bool) -> int:
    return _variations(_sign(c[-1]) * ((-1) ** (len(c) - 1) if negative else 1) for c in chain)


def _var_at_zero(chain) -> int:
    return _variations(_sign(c[0]) for c in chain)


def count_real_roots(p: IntPoly, interval: str = "all") -> int:
    """Distinct real roots of a squarefree ``p``; ``interval`` is ``"all"``
    or ``"nonpositive"`` for ``(-inf, 0]``."""
    if p.is_zero():
        raise InvalidInput("zero polynomial")
    if p.degree == 0:
        return 0
    if squarefree_part(p).degree != p.degree:
        raise InvalidInput("count_real_roots needs a squarefree polynomial")
    if interval == "all":
        chain = sturm_chain(p)
        return _var_at_inf(chain, True) - _var_at_inf(chain, False)
    if interval == "nonpositive":
        c = list(p.coeffs)
        at_zero = 0
        if c[0] == 0:
            c, at_zero = c[1:], 1
        if len(c) == 1:
            return at_zero
        chain = sturm_chain(IntPoly(c))
        return _var_at_inf(chain, True) - _var_at_zero(chain) + at_zero
    raise InvalidInput(f"unknown interval {interval!r}")


def is_real_rooted(p: IntPoly) -> bool:
    sf = squarefree_part(p)
    return count_real_roots(sf) == sf.degree


def has_nonpositive_real_roots(p: IntPoly) -> bool:
    """All roots real and ``<= 0``."""
    sf = squarefree_part(p)
    return count_real_roots(sf, "nonpositive") == sf.degree


def check_pla_chain(s, depth: int, target: str = "") -> Certificate:
    """Check real-rootedness of ``p[L^i(s)]`` for ``i = 0..depth``.

    If level 0 is not real-rooted the hypothesis fails and the result is
    ``inconclusive``; a later failure is a refutation.
    """
    start = time.perf_counter()
    if any(x < 0 for x in s):
        raise InvalidInput("sequence must be nonnegative")
    cur = tuple(s)
    for level in range(depth + 1):
        if not is_real_rooted(poly_from_seq(cur)):
            status = INCONCLUSIVE if level == 0 else REFUTED
            return Certificate(target, status, depth=level,
                               failure_index=(level, 0) if level else None,
                               elapsed=time.perf_counter() - start,
                               details={"hypothesis_holds": level > 0,
                                        "sequence": list(cur)})
        if level < depth:
            cur = l_step(cur)
    return Certificate(target, CERTIFIED, depth=depth, elapsed=time.perf_counter() - start)


def random_real_rooted(deg: int, seed: int) -> tuple[Fraction, ...]:
    """Coefficients of ``prod(x + r_i)`` for random positive rationals ``r_i``."""
    if deg < 1:
        raise InvalidInput("degree must be >= 1")
    rng = random.Random(seed)
    roots = [Fraction(rng.randint(1, 30), rng.randint(1, 10)) for _ in range(deg)]
    return tuple(poly_from_roots(roots))
