"""Symmetric functions in the complete homogeneous basis.

Every symmetric function here is an integer combination of ``h_lambda``.
Schur functions only appear through their Jacobi-Trudi expansion, so all
identities are checked as equalities of h-expansions. Monomial coefficients
come from counting nonnegative integer matrices with given margins.
"""

from __future__ import annotations

import sys
from collections import defaultdict
from itertools import accumulate, zip_longest

from .errors import InvalidInput, ResourceLimit

JACOBI_TRUDI_GUARD = 12
COUNT_STATE_GUARD = 10 ** 8

Partition = tuple


def partition(parts) -> Partition:
    """Normalize to a weakly decreasing tuple of positive integers."""
    p = tuple(sorted((int(x) for x in parts if x), reverse=True))
    if p and p[-1] < 0:
        raise InvalidInput("partitions have positive parts")
    return p


def rect(k: int, r: int) -> Partition:
    """The rectangle ``k^r``; empty if ``k == 0``."""
    return partition([k] * r)


def dominance_le(lam, mu) -> bool:
    """``lam <= mu`` in dominance order."""
    if sum(lam) != sum(mu):
        raise InvalidInput("dominance compares partitions of the same size")
    padded = zip_longest(lam, mu, fillvalue=0)
    a = b = 0
    for x, y in padded:
        a += x
        b += y
        if a > b:
            return False
    return True


def dominant_partition(shapes) -> Partition:
    """Componentwise sum of partitions."""
    return partition(sum(col) for col in zip_longest(*shapes, fillvalue=0))


class HExpr:
    """An integer combination of ``h_lambda``, keyed by partition."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Partition, int] = {}
        if terms:
            for key, c in dict(terms).items():
                if c:
                    key = partition(key)
                    self.terms[key] = self.terms.get(key, 0) + c
            self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def h(cls, *parts) -> HExpr:
        """``h_{parts}``; zero if any part is negative, ``h_0 = 1``."""
        if any(p < 0 for p in parts):
            return cls()
        return cls({partition(parts): 1})

    @classmethod
    def one(cls) -> HExpr:
        return cls({(): 1})

    def __eq__(self, other) -> bool:
        return isinstance(other, HExpr) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "HExpr(0)"
        return "HExpr(" + " + ".join(f"{c}*h{list(k)}" for k, c in sorted(self.terms.items())) + ")"

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def __neg__(self) -> HExpr:
        out = HExpr()
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def _combined(self, other: HExpr, sign: int) -> HExpr:
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + sign * v
        out = HExpr()
        out.terms = {k: v for k, v in acc.items() if v}
        return out

    def __add__(self, other: HExpr) -> HExpr:
        return self._combined(other, 1)

    def __sub__(self, other: HExpr) -> HExpr:
        return self._combined(other, -1)

    def __mul__(self, other) -> HExpr:
        if isinstance(other, int):
            out = HExpr()
            out.terms = {k: v * other for k, v in self.terms.items()} if other else {}
            return out
        return h_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> HExpr:
        out = HExpr.one()
        for _ in range(e):
            out = out * self
        return out

    def specialize(self, values) -> int:
        """Evaluate with ``h_j -> values(j)``."""
        total = 0
        for key, c in self.terms.items():
            prod = c
            for j in key:
                prod *= values(j)
            total += prod
        return total


def h_mul(f: HExpr, g: HExpr) -> HExpr:
    acc: dict[Partition, int] = defaultdict(int)
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            key = tuple(sorted(a + b, reverse=True)) if a and b else (a or b)
            acc[key] += ca * cb
    out = HExpr()
    out.terms = {k: v for k, v in acc.items() if v}
    return out


def schur_to_h(lam) -> HExpr:
    """Jacobi-Trudi: ``s_lam = det(h_{lam_i - i + j})``, expanded over permutations."""
    lam = partition(lam)
    ell = len(lam)
    if ell > JACOBI_TRUDI_GUARD:
        raise ResourceLimit(f"Jacobi-Trudi expansion limited to {JACOBI_TRUDI_GUARD} rows")
    acc: dict[Partition, int] = defaultdict(int)

    def walk(i: int, used: int, parts: list[int], sign: int, chosen: list[int]):
        if i == ell:
            acc[tuple(sorted((p for p in parts if p), reverse=True))] += sign
            return
        for j in range(ell):
            if used >> j & 1:
                continue
            idx = lam[i] - i + j
            if idx < 0:
                continue
            # parity of the permutation, counted as inversions against earlier picks
            inv = sum(1 for c in chosen if c > j)
            chosen.append(j)
            parts.append(idx)
            walk(i + 1, used | 1 << j, parts, -sign if inv % 2 else sign, chosen)
            parts.pop()
            chosen.pop()

    walk(0, 0, [], 1, [])
    out = HExpr()
    out.terms = {k: v for k, v in acc.items() if v}
    return out


def schur_product(shapes) -> HExpr:
    out = HExpr.one()
    for lam in shapes:
        out = out * schur_to_h(lam)
    return out


def h_sequence(last: int) -> list[HExpr]:
    """``(h_0, h_1, ..., h_last)``."""
    return [HExpr.h(j) for j in range(last + 1)]


def l_step_h(s) -> list[HExpr]:
    """``b_k = s_k^2 - s_{k-1} s_{k+1}`` with zeros outside the window."""
    n = len(s)
    zero = HExpr()
    out = []
    for k in range(n):
        prev = s[k - 1] if k > 0 else zero
        nxt = s[k + 1] if k + 1 < n else zero
        out.append(s[k] * s[k] - prev * nxt)
    return out


class _MatrixCounter:
    """Counts nonnegative integer matrices with prescribed row and column sums.

    Rows are peeled one at a time; remaining column sums are kept sorted,
    which is harmless because the count is symmetric in the columns.
    """

    def __init__(self, guard: int = COUNT_STATE_GUARD):
        self.memo: dict[tuple[Partition, Partition], int] = {}
        self.guard = guard
        self._comps: dict[tuple[int, Partition], list[Partition]] = {}

    def _compositions(self, total: int, bounds: Partition) -> list[Partition]:
        key = (total, bounds)
        got = self._comps.get(key)
        if got is not None:
            return got
        out: list[Partition] = []
        tail_cap = list(accumulate(reversed(bounds)))[::-1] + [0]

        def walk(i: int, left: int, cur: list[int]):
            if i == len(bounds):
                if left == 0:
                    out.append(partition(b - c for b, c in zip(bounds, cur)))
                return
            lo = max(0, left - tail_cap[i + 1])
            for c in range(lo, min(left, bounds[i]) + 1):
                cur.append(c)
                walk(i + 1, left - c, cur)
                cur.pop()

        walk(0, total, [])
        self._comps[key] = out
        return out

    def count(self, rows: Partition, cols: Partition) -> int:
        if len(rows) <= 1 or len(cols) <= 1:
            return 1
        key = (rows, cols)
        got = self.memo.get(key)
        if got is not None:
            return got
        if len(self.memo) >= self.guard:
            raise ResourceLimit("matrix-count state guard exceeded")
        rest = rows[1:]
        total = 0
        for remaining in self._compositions(rows[0], cols):
            total += self.count(rest, remaining)
        self.memo[key] = total
        return total


def m_coeff(f: HExpr, lam, counter: _MatrixCounter | None = None) -> int:
    """Coefficient of ``m_lam`` in ``f``."""
    lam = partition(lam)
    size = sum(lam)
    if f.is_zero():
        return 0
    if f.degrees() != {size}:
        raise InvalidInput("m_coeff needs f homogeneous of degree |lam|")
    counter = counter or _MatrixCounter()
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10000))
    try:
        return sum(c * counter.count(mu, lam) for mu, c in f.terms.items())
    finally:
        sys.setrecursionlimit(limit)


def kirillov_sides(k: int, r: int) -> tuple[HExpr, HExpr]:
    """Both sides of ``s_{k^r}^2 - s_{(k-1)^r} s_{(k+1)^r} = s_{k^(r-1)} s_{k^(r+1)}``."""
    left = schur_to_h(rect(k, r)) ** 2 - schur_to_h(rect(k - 1, r)) * schur_to_h(rect(k + 1, r))
    right = schur_to_h(rect(k, r - 1)) * schur_to_h(rect(k, r + 1))
    return left, right


def verify_kirillov(k: int, r: int) -> bool:
    if k < 1 or r < 1:
        raise InvalidInput("need k, r >= 1")
    left, right = kirillov_sides(k, r)
    return left == right


def l_closed(level: int, k: int) -> HExpr:
    """Closed forms for the first three L-iterates of ``(h_k)`` at index ``k``."""
    if k < 0:
        return HExpr()
    if level == 0:
        return schur_to_h((k,))
    if level == 1:
        return schur_to_h(rect(k, 2))
    if level == 2:
        return schur_to_h((k,)) * schur_to_h(rect(k, 3))
    if level == 3:
        return l3_terms(k)[0] + l3_terms(k)[1]
    raise InvalidInput("closed forms exist for levels 0..3")


def l3_terms(k: int) -> tuple[HExpr, HExpr]:
    """The two Schur-positive summands of the third iterate."""
    if k < 0:
        return HExpr(), HExpr()
    sk = schur_to_h((k,))
    sk2 = schur_to_h(rect(k, 2))
    first = sk * sk * sk2 * schur_to_h(rect(k, 4))
    second = schur_to_h(rect(k - 1, 3)) * sk2 * schur_to_h(rect(k + 1, 3)) if k >= 1 else HExpr()
    return first, second


def seven_term_table(k: int) -> list[tuple[int, list[Partition], Partition]]:
    """The expansion of the fourth iterate as signed Schur products, with the
    dominant partition printed for each term (as a function of ``k``)."""
    r = rect
    return [
        (1, [(k,)] * 4 + [r(k, 2)] * 2 + [r(k, 4)] * 2,
         partition((8 * k, 4 * k, 2 * k, 2 * k))),
        (2, [(k,)] * 2 + [r(k, 2)] * 2 + [r(k, 4), r(k - 1, 3), r(k + 1, 3)],
         partition((7 * k, 5 * k, 3 * k, k))),
        (1, [r(k - 1, 3)] * 2 + [r(k, 2)] * 2 + [r(k + 1, 3)] * 2,
         partition((6 * k, 6 * k, 4 * k))),
        (-1, [(k - 1,)] * 2 + [r(k - 1, 2), r(k - 1, 4)] + [(k + 1,)] * 2 + [r(k + 1, 2), r(k + 1, 4)],
         partition((8 * k, 4 * k, 2 * k, 2 * k))),
        (-1, [(k - 1,)] * 2 + [r(k - 1, 2), r(k - 1, 4), r(k, 3), r(k + 1, 2), r(k + 2, 3)],
         partition((7 * k - 1, 5 * k + 1, 3 * k + 1, k - 1))),
        (-1, [r(k - 2, 3), r(k - 1, 2), r(k, 3)] + [(k + 1,)] * 2 + [r(k + 1, 2), r(k + 1, 4)],
         partition((7 * k + 1, 5 * k - 1, 3 * k - 1, k + 1))),
        (-1, [r(k - 2, 3), r(k - 1, 2)] + [r(k, 3)] * 2 + [r(k + 1, 2), r(k + 2, 3)],
         partition((6 * k, 6 * k, 4 * k))),
    ]


def witness_partition(k: int) -> Partition:
    return partition((7 * k + 1, 5 * k - 1, 3 * k - 1, k + 1))


def dominance_screen(k: int) -> dict:
    """Check the printed dominant partitions and that the witness shape is
    not dominated by the dominant partition of any other term."""
    table = seven_term_table(k)
    lam = witness_partition(k)
    computed = [dominant_partition(shapes) for _, shapes, _ in table]
    matches = [c == printed for c, (_, _, printed) in zip(computed, table)]
    others = [c for i, c in enumerate(computed) if i != 5]
    return {
        "k": k,
        "table_matches": all(matches),
        "witness": lam,
        "witness_is_term_6": computed[5] == lam,
        "screen_passes": all(not dominance_le(lam, mu) for mu in others),
    }


def l4_expr(k: int) -> HExpr:
    """Fourth iterate at index ``k``, from the two-term third iterate."""
    mid = l_closed(3, k)
    return mid * mid - l_closed(3, k - 1) * l_closed(3, k + 1)


def l4_negative_witness(k: int) -> int:
    """``[m_lam] L^4(h_k)`` at ``lam = (7k+1, 5k-1, 3k-1, k+1)``."""
    if k < 2:
        raise InvalidInput("need k >= 2")
    return m_coeff(l4_expr(k), witness_partition(k))
