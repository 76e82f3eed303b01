from math import comb

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ilc import InvalidInput, ResourceLimit
from ilc.lpoly import LPoly, is_q_nonneg, lp_mul, mint, q_integer
from ilc.qlab import (
    certify_q_infinite_lc, column_l, gauss_binom, gauss_column,
    gauss_partition_oracle, gauss_row, gauss_top_coefficient, is_q_r0_factor,
    l_column2_closed, llq_resolver, q_line, q_narayana_check, ql_step,
    quantum_binom, quantum_bottom_coefficient, quantum_integer, quantum_row,
)

q = LPoly.monomial(1)
ONE = LPoly((1,))


def P(*coeffs, low=0):
    return LPoly(coeffs, low)


# --- Laurent polynomials ---------------------------------------------------

def test_lp_mul_examples():
    assert lp_mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert lp_mul(LPoly.monomial(-1), q) == ONE
    assert q_integer(2) * q_integer(2) == P(1, 2, 1)
    assert lp_mul(P(1, 1), LPoly()) == LPoly()


def test_normalization():
    f = LPoly((0, 0, 3, 0, 1, 0), -2)
    assert f.coeffs == (3, 0, 1) and f.min_exp == 0
    assert LPoly((0, 0)) == LPoly() and LPoly().min_exp == 0
    assert P(1, 2) - P(1, 2) == 0
    assert (P(1, 1) ** 3).terms() == {0: 1, 1: 3, 2: 3, 3: 1}


def _convolve(a, b):
    # dict convolution, independent of the dense/Kronecker code paths
    out = {}
    for i, x in a.terms().items():
        for j, y in b.terms().items():
            out[i + j] = out.get(i + j, 0) + x * y
    return LPoly.from_dict(out)


coeff_lists = st.lists(st.integers(-10 ** 12, 10 ** 12), min_size=0, max_size=70)


@settings(max_examples=300)
@given(coeff_lists, coeff_lists, st.integers(-20, 20), st.integers(-20, 20))
def test_lp_mul_matches_convolution(a, b, ea, eb):
    f, g = LPoly(a, ea), LPoly(b, eb)
    assert lp_mul(f, g) == _convolve(f, g)


def test_kronecker_path_on_large_inputs():
    f, g = gauss_binom(40, 20), quantum_binom(30, 15)
    assert lp_mul(f, g) == _convolve(f, g)
    big = LPoly(tuple((-1) ** i * 10 ** 40 * (i + 1) for i in range(200)), -7)
    assert lp_mul(big, f) == _convolve(big, f)


def test_is_q_nonneg_and_mint_examples():
    assert is_q_nonneg(P(1, 2)) == (True, None)
    assert is_q_nonneg(P(1, 0, -1)) == (False, 2)
    assert mint(P(0, 0, -3, 5)) == (-3, 2)
    assert mint(LPoly.monomial(-4, 7)) == (7, -4)
    with pytest.raises(InvalidInput):
        mint(LPoly())


# --- Gaussian and quantum binomials ---------------------------------------

def test_gauss_examples():
    assert gauss_binom(4, 2) == P(1, 1, 2, 1, 1)
    assert gauss_binom(7, 0) == ONE
    assert gauss_binom(3, 1) == P(1, 1, 1)
    assert gauss_binom(3, 4) == 0 and gauss_binom(3, -1) == 0


def test_partition_oracle_examples():
    assert gauss_partition_oracle(4, 2) == P(1, 1, 2, 1, 1)
    assert gauss_partition_oracle(2, 1) == P(1, 1)
    f = gauss_partition_oracle(5, 2)
    assert f.max_exp == 6 and f.coeffs == f.coeffs[::-1]
    with pytest.raises(ResourceLimit):
        gauss_partition_oracle(60, 30)


def test_gauss_matches_partition_oracle():
    for n in range(15):
        for k in range(n + 1):
            assert gauss_binom(n, k) == gauss_partition_oracle(n, k), (n, k)


def test_gauss_matches_product_formula():
    x = sympy.symbols("x")
    for n in range(11):
        for k in range(n + 1):
            num = sympy.prod([1 - x ** (n - i) for i in range(k)])
            den = sympy.prod([1 - x ** (i + 1) for i in range(k)])
            coeffs = sympy.Poly(sympy.cancel(num / den), x).all_coeffs()[::-1]
            assert gauss_binom(n, k) == LPoly(tuple(int(c) for c in coeffs))


def test_gauss_at_one_is_binomial():
    for n in range(31):
        for k in range(n + 1):
            assert gauss_binom(n, k).at_one() == comb(n, k)


def test_quantum_examples():
    assert quantum_binom(2, 1) == LPoly.monomial(-1) + q
    assert quantum_binom(4, 2) == LPoly((1, 0, 1, 0, 2, 0, 1, 0, 1), -4)
    assert quantum_binom(9, 0) == ONE


def _q_factorial(n):
    out = ONE
    for j in range(1, n + 1):
        out = out * LPoly.from_dict({e: 1 for e in range(1 - j, j, 2)})
    return out


def test_quantum_matches_factorial_definition():
    for n in range(13):
        for k in range(n + 1):
            lhs = quantum_binom(n, k) * _q_factorial(k) * _q_factorial(n - k)
            assert lhs == _q_factorial(n)


def test_quantum_palindromic():
    for n in range(31):
        assert quantum_integer(n + 1).is_palindromic_about_zero()
        for k in range(n + 1):
            assert quantum_binom(n, k).is_palindromic_about_zero()


# --- the q-analogue L-operator ---------------------------------------------

def test_ql_step_trivial_row():
    assert ql_step((ONE, ONE)) == (ONE, ONE)


def test_column_one_iterates_to_powers():
    col = gauss_column(1, 20)
    first = ql_step(col)
    for i, f in enumerate(first[:-1]):
        assert f == LPoly.monomial(i)  # L_n [n, 1] = q^(n-1)


def test_column_two_closed_form():
    col = gauss_column(2, 22)
    level = col
    for i in range(1, 5):
        level = ql_step(level)
        for n in range(2, 16):
            assert level[n - 2] == l_column2_closed(n, i), (i, n)


def test_q_r0_examples():
    row = quantum_row(2)
    assert not is_q_r0_factor(row)
    assert is_q_r0_factor(ql_step(row))
    assert is_q_r0_factor((ONE, LPoly(), LPoly()))
    with pytest.raises(InvalidInput):
        is_q_r0_factor((ONE, P(1, -1)))


def test_mint_lemma():
    for n in range(1, 21):
        b = ql_step(gauss_row(n))
        for k in range(n // 2 + 1):
            want = 2 if 2 * k == n else 1
            assert mint(b[k]) == (want, k), (n, k)


def test_middle_second_iterate_mint():
    assert is_q_nonneg(ql_step(ql_step(gauss_row(4)))[2]) == (False, 2)
    for n in range(2, 21):
        c = ql_step(ql_step(gauss_row(n)))
        assert mint(c[n // 2]) == (-1, n - 2), n


def test_gauss_rows_refute_at_level_two():
    for n in range(2, 16):
        cert = certify_q_infinite_lc(gauss_row(n))
        assert cert.refuted and cert.failure_index[0] == 2
        assert cert.details["mint_coeff"] == -1


def test_q_narayana():
    assert q_narayana_check(4, 2) and q_narayana_check(5, 3) and q_narayana_check(3, 1)
    assert column_l(gauss_binom, 3, 1) == LPoly.monomial(2)
    for n in range(1, 21):
        for k in range(1, n + 1):
            assert q_narayana_check(n, k), (n, k)


def test_llq_reading():
    for n, k in [(5, 2), (6, 3)]:
        rep = llq_resolver(n, k)
        assert rep["corrected"] and not rep["literal"] and rep["q_equals_1"]
    for n in range(2, 13):
        for k in range(2, n + 1):
            rep = llq_resolver(n, k)
            assert rep["corrected"] and rep["q_equals_1"]
            # the printed reading only agrees when the two factors coincide
            assert rep["literal"] == (gauss_binom(n, k - 1) == gauss_binom(n, k - 2))


def test_top_and_bottom_coefficients():
    for u in range(2, 7):
        for v in range(1, u):
            for n in range(11):
                assert gauss_top_coefficient(n, u, v) == -1
                assert quantum_bottom_coefficient(n, u, v) == -1


def test_quantum_line_above_diagonal_refutes_at_once():
    cert = certify_q_infinite_lc(q_line(quantum_binom, 0, 2, 1, 6), truncated=True)
    assert cert.refuted and cert.failure_index == (1, 1)
    assert cert.details["mint_coeff"] == -1


@pytest.mark.parametrize("binom", [gauss_binom, quantum_binom])
def test_diagonal_fails_within_four_levels(binom):
    for u in range(2, 7):
        cert = certify_q_infinite_lc(q_line(binom, 2, u, u, 9), truncated=True)
        assert cert.refuted and cert.failure_index[0] <= 4, u


def test_gauss_diagonal_n3_level_five():
    cert = certify_q_infinite_lc(q_line(gauss_binom, 3, 2, 2, 10), truncated=True)
    assert cert.refuted and cert.failure_index[0] == 5


def test_quantum_rows_certify():
    for n in range(16):
        cert = certify_q_infinite_lc(quantum_row(n))
        assert cert.certified, n


def test_certificate_agrees_with_q_equals_one():
    # a q-certificate specializes to an ordinary one at q = 1
    from ilc.seqlab import certify_infinite_lc
    for n in range(2, 12):
        qcert = certify_q_infinite_lc(quantum_row(n))
        cert = certify_infinite_lc(tuple(f.at_one() for f in quantum_row(n)))
        assert cert.certified and cert.r0_level <= qcert.r0_level
