import random
from fractions import Fraction

import pytest
import sympy

from ilc import InvalidInput
from ilc.polyroots import (
    IntPoly, check_pla_chain, count_real_roots, has_nonpositive_real_roots,
    is_real_rooted, poly_from_roots, poly_from_seq, random_real_rooted,
    squarefree_part, sturm_chain,
)
from ilc.seqlab import boros_moll_coeffs, finite_line, is_log_concave, l_step, pascal_row


def test_poly_from_seq_examples():
    assert poly_from_seq((1, 3, 3, 1)) == IntPoly([1, 3, 3, 1])
    assert poly_from_seq(boros_moll_coeffs(2)) == IntPoly([21, 30, 12])
    assert poly_from_seq((0, 0, 1)) == IntPoly([0, 0, 1])
    assert IntPoly([1, 2, 0, 0]).degree == 1
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly([1, 3, 3, 1])(Fraction(-1)) == 0


def test_squarefree_examples():
    assert squarefree_part(IntPoly([1, 3, 3, 1])) == IntPoly([1, 1])
    assert squarefree_part(IntPoly([-1, 0, 1])) == IntPoly([-1, 0, 1])
    assert squarefree_part(IntPoly([0, 0, 0, 1])) == IntPoly([0, 1])
    assert squarefree_part(IntPoly([7])) == IntPoly([1])
    with pytest.raises(InvalidInput):
        squarefree_part(IntPoly([]))


def test_count_examples():
    assert count_real_roots(IntPoly([-1, 0, 1])) == 2
    assert count_real_roots(IntPoly([1, 0, 1])) == 0
    assert count_real_roots(IntPoly([21, 30, 12])) == 0
    assert count_real_roots(IntPoly([-1, 0, 1]), "nonpositive") == 1
    assert count_real_roots(IntPoly([0, 1, 1]), "nonpositive") == 2
    assert count_real_roots(IntPoly([5])) == 0
    with pytest.raises(InvalidInput):
        count_real_roots(IntPoly([1, 2, 1]))
    with pytest.raises(InvalidInput):
        count_real_roots(IntPoly([1, 1]), "positive")


def test_sturm_chain_shape():
    chain = sturm_chain(IntPoly([-6, 11, -6, 1]))
    assert len(chain) == 4 and len(chain[-1]) == 1


def test_real_rooted_examples():
    for n in range(1, 12):
        assert is_real_rooted(IntPoly(pascal_row(n)))
    assert is_real_rooted(poly_from_seq(l_step(pascal_row(5))))
    assert not is_real_rooted(IntPoly([1, 0, 0, 0, 1]))
    assert has_nonpositive_real_roots(IntPoly([6, 11, 6, 1]))
    assert not has_nonpositive_real_roots(IntPoly([-6, 11, -6, 1]))


def test_roots_helper_examples():
    assert poly_from_roots([1, 1]) == [1, 2, 1]
    assert poly_from_roots([1, 2, 3]) == [6, 11, 6, 1]
    for seed in range(20):
        assert is_real_rooted(poly_from_seq(random_real_rooted(1 + seed % 8, seed)))
    with pytest.raises(InvalidInput):
        random_real_rooted(0, 1)


def _product(factors):
    out = [Fraction(1)]
    for f in factors:
        nxt = [Fraction(0)] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                nxt[i + j] += a * b
        out = nxt
    return out


def test_sturm_matches_constructed_roots():
    rng = random.Random(99)
    for _ in range(1000):
        pool = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(rng.randint(1, 4))]
        roots = [rng.choice(pool) for _ in range(rng.randint(1, 6))]
        factors = [[-r, 1] for r in roots]
        for _ in range(rng.randint(0, 2)):
            # x^2 + b x + c with b^2 < 4c has no real roots
            b = rng.randint(-5, 5)
            factors.append([b * b // 4 + rng.randint(1, 9), b, 1])
        p = poly_from_seq(_product(factors))
        sf = squarefree_part(p)
        assert count_real_roots(sf) == len(set(roots))
        assert count_real_roots(sf, "nonpositive") == len({r for r in roots if r <= 0})


def test_sturm_matches_sympy():
    rng = random.Random(5)
    x = sympy.symbols("x")
    for _ in range(200):
        coeffs = [rng.randint(-30, 30) for _ in range(rng.randint(2, 9))]
        p = IntPoly(coeffs)
        if p.degree < 1:
            continue
        expr = sympy.Poly(list(reversed(p.coeffs)), x)
        roots = set(sympy.real_roots(expr))
        sf = squarefree_part(p)
        assert count_real_roots(sf) == len(roots)
        assert count_real_roots(sf, "nonpositive") == sum(1 for r in roots if r <= 0)


def test_newton_consistency():
    for seed in range(300):
        seq = random_real_rooted(1 + seed % 10, seed)
        assert all(c >= 0 for c in seq)
        assert is_log_concave(seq)


def test_pla_chain_rows():
    for n in range(13):
        assert check_pla_chain(pascal_row(n), 4).certified


def test_pla_chain_line_level_zero():
    assert is_real_rooted(poly_from_seq(finite_line(8, 1, 2)))
    assert check_pla_chain(finite_line(8, 1, 2), 0).certified


def test_pla_chain_hypothesis_failure_is_inconclusive():
    cert = check_pla_chain((1, 0, 0, 0, 1), 3)
    assert cert.status == "inconclusive" and not cert.details["hypothesis_holds"]
    with pytest.raises(InvalidInput):
        check_pla_chain((1, -1), 2)


def test_pla_fuzz_sample():
    for seed in range(50):
        assert check_pla_chain(random_real_rooted(1 + seed % 8, seed), 3).certified
