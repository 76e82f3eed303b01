"""Integer Laurent polynomials in one variable ``q``, stored densely."""

from __future__ import annotations

import gmpy2

from .errors import InvalidInput

# below this many coefficients schoolbook beats packing into one big integer
_KRONECKER_MIN = 24


class LPoly:
    """``sum(coeffs[i] * q**(min_exp + i))`` with nonzero end coefficients.

    The zero polynomial has empty ``coeffs`` and ``min_exp == 0``.
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, coeffs=(), min_exp: int = 0):
        c = [int(x) for x in coeffs]
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        self.coeffs = tuple(c[lo:hi])
        self.min_exp = min_exp + lo if self.coeffs else 0

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LPoly:
        return cls((coeff,), exp)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LPoly:
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        c = [0] * (hi - lo + 1)
        for e, v in terms.items():
            c[e - lo] += v
        return cls(c, lo)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise InvalidInput("zero polynomial has no degree")
        return self.min_exp + len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {self.min_exp + i: c for i, c in enumerate(self.coeffs) if c}

    def coeff(self, exp: int) -> int:
        i = exp - self.min_exp
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LPoly((other,))
        if not isinstance(other, LPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "LPoly(0)"
        parts = [f"{c}*q^{e}" for e, c in self.terms().items()]
        return "LPoly(" + " + ".join(parts) + ")"

    def __neg__(self) -> LPoly:
        return LPoly([-c for c in self.coeffs], self.min_exp)

    def __add__(self, other: LPoly) -> LPoly:
        return _combine(self, other, 1)

    def __sub__(self, other: LPoly) -> LPoly:
        return _combine(self, other, -1)

    def __mul__(self, other) -> LPoly:
        if isinstance(other, int):
            return LPoly([c * other for c in self.coeffs], self.min_exp)
        return lp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LPoly:
        out = LPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> LPoly:
        """Multiply by ``q**k``."""
        return LPoly(self.coeffs, self.min_exp + k) if self.coeffs else self

    def substitute_power(self, d: int) -> LPoly:
        """Replace ``q`` by ``q**d`` for ``d >= 1``."""
        if d < 1:
            raise InvalidInput("substitution power must be >= 1")
        if not self.coeffs:
            return self
        c = [0] * ((len(self.coeffs) - 1) * d + 1)
        c[::d] = self.coeffs
        return LPoly(c, self.min_exp * d)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def is_palindromic_about_zero(self) -> bool:
        return self.coeffs == self.coeffs[::-1] and self.min_exp == -self.max_exp


def _combine(f: LPoly, g: LPoly, sign: int) -> LPoly:
    if not g.coeffs:
        return f
    if not f.coeffs:
        return g if sign == 1 else -g
    lo = min(f.min_exp, g.min_exp)
    hi = max(f.max_exp, g.max_exp)
    c = [0] * (hi - lo + 1)
    off = f.min_exp - lo
    for i, v in enumerate(f.coeffs):
        c[off + i] = v
    off = g.min_exp - lo
    if sign == 1:
        for i, v in enumerate(g.coeffs):
            c[off + i] += v
    else:
        for i, v in enumerate(g.coeffs):
            c[off + i] -= v
    return LPoly(c, lo)


def _schoolbook(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pack(coeffs, width: int) -> gmpy2.mpz:
    data = b"".join(int(c).to_bytes(width, "little") for c in coeffs)
    return gmpy2.mpz(int.from_bytes(data, "little"))


def _unpack(value, width: int, count: int) -> list[int]:
    data = int(value).to_bytes(width * count, "little")
    return [int.from_bytes(data[i:i + width], "little") for i in range(0, width * count, width)]


def _kronecker_nonneg(a, b) -> list[int]:
    bits = max(map(int.bit_length, a)) + max(map(int.bit_length, b)) + min(len(a), len(b)).bit_length() + 1
    width = (bits + 7) // 8
    return _unpack(_pack(a, width) * _pack(b, width), width, len(a) + len(b) - 1)


def _split(coeffs):
    pos = [c if c > 0 else 0 for c in coeffs]
    neg = [-c if c < 0 else 0 for c in coeffs]
    return pos, neg


def _mul_coeffs(a, b) -> list[int]:
    if min(len(a), len(b)) < _KRONECKER_MIN:
        return _schoolbook(a, b)
    a_neg = any(c < 0 for c in a)
    b_neg = any(c < 0 for c in b)
    if not a_neg and not b_neg:
        return _kronecker_nonneg(a, b)
    ap, an = _split(a)
    bp, bn = _split(b)
    parts = []
    for x, y, s in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if any(x) and any(y):
            parts.append((_kronecker_nonneg(x, y), s))
    out = [0] * (len(a) + len(b) - 1)
    for vals, s in parts:
        if s == 1:
            for i, v in enumerate(vals):
                out[i] += v
        else:
            for i, v in enumerate(vals):
                out[i] -= v
    return out


def lp_mul(f: LPoly, g: LPoly) -> LPoly:
    if not f.coeffs or not g.coeffs:
        return LPoly()
    return LPoly(_mul_coeffs(f.coeffs, g.coeffs), f.min_exp + g.min_exp)


def q_integer(n: int) -> LPoly:
    """``[n] = 1 + q + ... + q^(n-1)``."""
    return LPoly([1] * n) if n > 0 else LPoly()


def is_q_nonneg(f: LPoly) -> tuple[bool, int | None]:
    """Coefficientwise nonnegativity, with the least exponent of a negative coefficient."""
    for i, c in enumerate(f.coeffs):
        if c < 0:
            return False, f.min_exp + i
    return True, None


def mint(f: LPoly) -> tuple[int, int]:
    """The nonzero term of least degree, as ``(coeff, exp)``."""
    if not f.coeffs:
        raise InvalidInput("zero polynomial has no least term")
    return f.coeffs[0], f.min_exp
