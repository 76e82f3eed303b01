import itertools
import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from ilc import InvalidInput, ResourceLimit
from ilc.seqlab import l_step
from ilc.symlab import (
    HExpr, _MatrixCounter, dominance_le, dominance_screen, dominant_partition,
    h_mul, h_sequence, kirillov_sides, l3_terms, l4_expr, l4_negative_witness,
    l_closed, l_step_h, m_coeff, partition, rect, schur_product, schur_to_h,
    seven_term_table, verify_kirillov, witness_partition,
)

h = HExpr.h


def partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def ssyt_count(shape, content):
    """Semistandard tableaux of ``shape`` with ``content``, by brute force."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    letters = [v for v, c in enumerate(content) for _ in range(c)]
    count = 0
    for filling in set(itertools.permutations(letters)):
        t = dict(zip(cells, filling))
        if all(t[i, j] <= t[i, j + 1] for i, j in cells if (i, j + 1) in t) and \
           all(t[i, j] < t[i + 1, j] for i, j in cells if (i + 1, j) in t):
            count += 1
    return count


def matrix_count(rows, cols):
    """Nonnegative integer matrices with the given margins, by brute force."""
    count = 0
    for entries in itertools.product(*(range(min(r, c) + 1) for r in rows for c in cols)):
        grid = [entries[i * len(cols):(i + 1) * len(cols)] for i in range(len(rows))]
        if all(sum(g) == r for g, r in zip(grid, rows)) and \
           all(sum(g[j] for g in grid) == c for j, c in enumerate(cols)):
            count += 1
    return count


def test_partition_helpers():
    assert partition([1, 0, 3, 2]) == (3, 2, 1)
    assert rect(3, 2) == (3, 3) and rect(0, 4) == ()
    assert dominant_partition([(2,), (2, 2, 2)]) == (4, 2, 2)
    assert dominant_partition([]) == ()


def test_dominance_examples():
    assert dominance_le((2, 2), (3, 1))
    assert not dominance_le((3, 1), (2, 2))
    assert dominance_le((2, 1, 1), (2, 1, 1))
    assert dominance_le((1, 1, 1, 1), (2, 2))
    assert not dominance_le((3, 3), (4, 1, 1))
    with pytest.raises(InvalidInput):
        dominance_le((2,), (1,))


def test_dominance_is_a_partial_order():
    for n in range(1, 8):
        ps = list(partitions(n))
        for a, b in itertools.product(ps, repeat=2):
            if dominance_le(a, b) and dominance_le(b, a):
                assert a == b
            for c in ps:
                if dominance_le(a, b) and dominance_le(b, c):
                    assert dominance_le(a, c)


def test_h_mul_examples():
    assert h(2) * h(1) == h(2, 1)
    assert h_mul(h(2) - h(1, 1), h(1)) == h(2, 1) - h(1, 1, 1)
    f = h(3, 1) - 2 * h(2, 2)
    assert HExpr.one() * f == f and f * HExpr.one() == f
    assert h(0) == HExpr.one() and h(-1).is_zero()


def test_schur_to_h_examples():
    for k in range(6):
        assert schur_to_h((k,)) == h(k)
    assert schur_to_h((2, 1)) == h(2, 1) - h(3)
    for k in range(1, 6):
        assert schur_to_h((k, k)) == h(k, k) - h(k + 1, k - 1)
        assert schur_to_h((k, k)) == h(k) * h(k) - h(k - 1) * h(k + 1)
    with pytest.raises(ResourceLimit):
        schur_to_h((1,) * 13)


def test_m_coeff_examples():
    assert m_coeff(h(2), (1, 1)) == 1
    assert m_coeff(schur_to_h((2, 1)), (1, 1, 1)) == 2
    for lam in partitions(6):
        assert m_coeff(schur_to_h(lam), lam) == 1
    with pytest.raises(InvalidInput):
        m_coeff(h(2) + h(3), (2,))
    assert m_coeff(HExpr(), (3,)) == 0


def test_matrix_counter_matches_brute_force():
    counter = _MatrixCounter()
    for n in range(1, 5):
        for rows in partitions(n):
            for cols in partitions(n):
                assert counter.count(rows, cols) == matrix_count(rows, cols)
    for rows, cols in [((3, 1, 1), (2, 2, 1)), ((2, 2), (1, 1, 1, 1))]:
        # column order does not matter
        for perm in set(itertools.permutations(cols)):
            assert matrix_count(rows, perm) == counter.count(rows, cols)


def test_kostka_numbers_match_tableaux():
    for n in range(1, 7):
        for lam in partitions(n):
            s = schur_to_h(lam)
            for mu in partitions(n):
                assert m_coeff(s, mu) == ssyt_count(lam, mu), (lam, mu)


def test_basis_soundness():
    for n in range(1, 9):
        ps = list(partitions(n))
        for lam in ps:
            s = schur_to_h(lam)
            for mu in ps:
                c = m_coeff(s, mu)
                if not dominance_le(mu, lam):
                    assert c == 0
                else:
                    assert c >= 1
            assert m_coeff(s, lam) == 1


def test_resource_guard():
    with pytest.raises(ResourceLimit):
        m_coeff(h(3, 3, 3, 3), (2, 2, 2, 2, 2, 2), counter=_MatrixCounter(guard=3))


def test_product_coefficient_at_dominant_shape():
    rng = random.Random(3)
    small = [p for n in range(1, 5) for p in partitions(n)]
    for _ in range(60):
        shapes = [rng.choice(small) for _ in range(rng.randint(2, 3))]
        assert m_coeff(schur_product(shapes), dominant_partition(shapes)) == 1


@given(st.integers(1, 7), st.integers(0, 5))
def test_specialization_reproduces_columns(n, last):
    # h_j(1^n) = binom(n + j - 1, j) is a ring map, so it commutes with L
    col = lambda j: comb(n + j - 1, j)  # noqa: E731
    hs, seq = h_sequence(last + 3), tuple(col(j) for j in range(last + 4))
    for _ in range(2):
        hs, seq = l_step_h(hs), l_step(seq)
        assert tuple(f.specialize(col) for f in hs) == seq


def test_specialization_to_rows():
    for n in range(1, 7):
        row = lambda j: comb(n - 1, j)  # noqa: E731
        hs, seq = h_sequence(6), tuple(row(j) for j in range(7))
        for _ in range(3):
            hs, seq = l_step_h(hs), l_step(seq)
            assert tuple(f.specialize(row) for f in hs) == seq


def test_identity_chain():
    assert l_closed(1, 3) == h(3) * h(3) - h(2) * h(4)
    for k in range(1, 5):
        seq = h_sequence(k + 3)
        for level in range(1, 4):
            seq = l_step_h(seq)
            assert seq[k] == l_closed(level, k), (level, k)


@pytest.mark.parametrize("k, r", [(3, 1), (2, 2), (3, 3)])
def test_kirillov_examples(k, r):
    assert verify_kirillov(k, r)


def test_kirillov_grid():
    for k in range(1, 5):
        for r in range(1, 5):
            left, right = kirillov_sides(k, r)
            assert left == right


def test_third_iterate_terms_are_schur_products():
    for k in range(2, 5):
        first, second = l3_terms(k)
        assert m_coeff(first, dominant_partition([(k,), (k,), rect(k, 2), rect(k, 4)])) == 1
        assert m_coeff(second, dominant_partition([rect(k - 1, 3), rect(k, 2), rect(k + 1, 3)])) == 1


def test_seven_term_table_sums_to_fourth_iterate():
    for k in (2, 3):
        total = HExpr()
        for coef, shapes, _ in seven_term_table(k):
            total = total + coef * schur_product(shapes)
        assert total == l4_expr(k)


def test_fourth_iterate_against_raw_iteration():
    seq = h_sequence(6)
    for _ in range(4):
        seq = l_step_h(seq)
    assert seq[2] == l4_expr(2)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_dominance_screen(k):
    rep = dominance_screen(k)
    assert rep["table_matches"] and rep["witness_is_term_6"] and rep["screen_passes"]
    assert rep["witness"] == (7 * k + 1, 5 * k - 1, 3 * k - 1, k + 1)


def test_l4_witness_k2():
    assert witness_partition(2) == (15, 9, 5, 3)
    assert l4_negative_witness(2) == -1
    with pytest.raises(InvalidInput):
        l4_negative_witness(1)
