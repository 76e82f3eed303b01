"""Toeplitz truncations, total nonnegativity, compound matrices and PSD tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, lcm

from .errors import InvalidInput, ResourceLimit
from .polyroots import has_nonpositive_real_roots, poly_from_seq

MINOR_GUARD = 10 ** 7
PSD_MINOR_GUARD = 8


class ExactMatrix:
    """A dense matrix of ints and Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = [list(r) for r in entries]
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise InvalidInput("matrix must be a nonempty rectangle")
        self.entries = [[_normalize(x) for x in r] for r in rows]
        self.rows, self.cols = len(rows), len(rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"ExactMatrix({self.entries})"

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise InvalidInput("shape mismatch")
        return ExactMatrix([[sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                             for j in range(other.cols)] for i in range(self.rows)])

    def transpose(self) -> ExactMatrix:
        return ExactMatrix([list(c) for c in zip(*self.entries)])

    def submatrix(self, rows, cols) -> ExactMatrix:
        return ExactMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i))


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, (int, Fraction)):
        return x
    raise TypeError(f"matrix entries must be exact, got {type(x).__name__}")


def identity(n: int) -> ExactMatrix:
    return ExactMatrix([[int(i == j) for j in range(n)] for i in range(n)])


def toeplitz(s, size: int) -> ExactMatrix:
    """``size x size`` truncation of ``(a_{j-i})``."""
    if size < 1:
        raise InvalidInput("size must be >= 1")
    n = len(s)
    return ExactMatrix([[s[j - i] if 0 <= j - i < n else 0 for j in range(size)]
                        for i in range(size)])


def det(A: ExactMatrix):
    """Determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise InvalidInput("determinant of a non-square matrix")
    d = _common_denominator(A)
    m = [[x * d for x in row] for row in A.entries]
    n = len(m)
    m = [[int(x) for x in row] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    value = sign * m[n - 1][n - 1]
    return _normalize(Fraction(value, d ** n)) if d != 1 else value


def _common_denominator(A: ExactMatrix) -> int:
    d = 1
    for row in A.entries:
        for x in row:
            if isinstance(x, Fraction):
                d = lcm(d, x.denominator)
    return d


def minor_count(A: ExactMatrix, max_order: int) -> int:
    return sum(comb(A.rows, k) * comb(A.cols, k) for k in range(1, max_order + 1))


def _bits(mask: int) -> tuple[int, ...]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def all_minors_nonneg(A: ExactMatrix, max_order: int | None = None):
    """Check every minor of order ``<= max_order``.

    Returns ``(True, None)`` or ``(False, (rows, cols, value))`` for the
    least negative minor, ordered by order, then rows, then columns.
    Minors of order k are built from those of order k-1 by expanding along
    their first row; only nonzero minors are stored.
    """
    top = min(A.rows, A.cols)
    max_order = top if max_order is None else max_order
    if not 1 <= max_order <= top:
        raise InvalidInput("max_order must lie in 1..min(rows, cols)")
    if minor_count(A, max_order) > MINOR_GUARD:
        raise ResourceLimit("minor enumeration exceeds the guard")
    d = _common_denominator(A)
    a = [[int(x * d) for x in row] for row in A.entries]
    nrows, ncols = A.rows, A.cols
    # layer maps (rowmask, colmask) -> minor of the denominator-cleared matrix
    layer = {}
    for i in range(nrows):
        for j in range(ncols):
            if a[i][j]:
                layer[(1 << i, 1 << j)] = a[i][j]
    for order in range(1, max_order + 1):
        negatives = [(_bits(r), _bits(c), v) for (r, c), v in layer.items() if v < 0]
        if negatives:
            rows, cols, v = min(negatives)
            return False, (rows, cols, _normalize(Fraction(v, d ** order)))
        if order == max_order:
            break
        nxt: dict = {}
        for (rmask, cmask), v in layer.items():
            low = (rmask & -rmask).bit_length() - 1
            for r0 in range(low):
                row = a[r0]
                for j in range(ncols):
                    if cmask >> j & 1 or not row[j]:
                        continue
                    # sign from j's position in the enlarged column set
                    pos = bin(cmask & ((1 << j) - 1)).count("1")
                    term = row[j] * v if pos % 2 == 0 else -row[j] * v
                    key = (rmask | 1 << r0, cmask | 1 << j)
                    nxt[key] = nxt.get(key, 0) + term
        layer = {k: v for k, v in nxt.items() if v}
        if not layer:
            break
    return True, None


def is_tnn(A: ExactMatrix) -> bool:
    return all_minors_nonneg(A)[0]


def l_matrix(A: ExactMatrix) -> ExactMatrix:
    """Matrix of adjacent 2x2 minors."""
    if A.rows < 2 or A.cols < 2:
        raise InvalidInput("need at least 2 rows and 2 columns")
    e = A.entries
    return ExactMatrix([[e[i][j] * e[i + 1][j + 1] - e[i][j + 1] * e[i + 1][j]
                         for j in range(A.cols - 1)] for i in range(A.rows - 1)])


def fallat_example(t) -> ExactMatrix:
    """Totally nonnegative for ``t >= 0`` but whose adjacent-minor matrix is
    not for large ``t``."""
    t = Fraction(t)
    if t < 0:
        raise InvalidInput("t must be nonnegative")
    return ExactMatrix([
        [1, t, 0, 0, 0],
        [t, t ** 2 + 1, 2 * t, t ** 2, 0],
        [t ** 2, t ** 3 + 2 * t, 1 + 4 * t ** 2, 2 * t ** 3 + t, 0],
        [0, t ** 2, 2 * t ** 3 + 2 * t, t ** 4 + 2 * t ** 2 + 1, t],
        [0, 0, t ** 2, t ** 3 + t, t ** 2],
    ])


def compound2(A: ExactMatrix) -> ExactMatrix:
    """All 2x2 minors, rows and columns indexed by lexicographic index pairs."""
    if A.rows != A.cols or A.rows < 2:
        raise InvalidInput("need a square matrix of size >= 2")
    e = A.entries
    pairs = list(combinations(range(A.rows), 2))
    return ExactMatrix([[e[i][k] * e[j][l] - e[i][l] * e[j][k] for (k, l) in pairs]
                        for (i, j) in pairs])


def is_psd(A: ExactMatrix) -> bool:
    """Positive semidefinite iff every principal minor is nonnegative."""
    if not A.is_symmetric():
        raise InvalidInput("PSD test needs a symmetric matrix")
    if A.rows > PSD_MINOR_GUARD:
        raise ResourceLimit(f"principal-minor PSD test limited to {PSD_MINOR_GUARD}x{PSD_MINOR_GUARD}")
    n = A.rows
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            if det(A.submatrix(idx, idx)) < 0:
                return False
    return True


def is_psd_ldl(A: ExactMatrix) -> bool:
    """PSD test by symmetric elimination, for sizes beyond the minor guard.

    A zero pivot forces its whole row to vanish; a negative pivot refutes.
    """
    if not A.is_symmetric():
        raise InvalidInput("PSD test needs a symmetric matrix")
    m = [[Fraction(x) for x in row] for row in A.entries]
    while m:
        p = m[0][0]
        if p < 0:
            return False
        if p == 0:
            if any(m[0][j] for j in range(1, len(m))):
                return False
            m = [row[1:] for row in m[1:]]
            continue
        m = [[m[i][j] - m[i][0] * m[0][j] / p for j in range(1, len(m))]
             for i in range(1, len(m))]
    return True


def asw_crosscheck(s, size: int = 10) -> dict:
    """Compare root location with total nonnegativity of a Toeplitz truncation.

    Nonpositive real roots must give a TNN truncation. Otherwise a negative
    minor is looked for; not finding one at this size proves nothing.
    """
    if any(x < 0 for x in s):
        raise InvalidInput("sequence must be nonnegative")
    roots_ok = has_nonpositive_real_roots(poly_from_seq(s))
    tnn, witness = all_minors_nonneg(toeplitz(s, size))
    return {
        "size": size,
        "nonpositive_real_roots": roots_ok,
        "tnn_to_truncation": tnn,
        "witness": witness,
        "consistent": (not roots_ok) or tnn,
        "conclusive": roots_ok or not tnn,
    }
