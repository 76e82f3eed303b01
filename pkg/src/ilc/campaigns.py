"""Campaign targets: each task is a picklable ``(function, args)`` pair
returning a Certificate, plus the outcome the literature predicts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import polyroots, qlab, region, seqlab, symlab, tnnlab
from .certificate import CERTIFIED, INCONCLUSIVE, REFUTED, Certificate
from .exactnum import r0_factor_holds
from .lpoly import mint


@dataclass(frozen=True)
class Task:
    func: str
    args: tuple
    expected: str | None  # None when nothing is asserted


def _status(ok: bool) -> str:
    return CERTIFIED if ok else REFUTED


# --- sequences -------------------------------------------------------------

def row_target(n: int, max_depth: int) -> Certificate:
    return seqlab.certify_infinite_lc(seqlab.pascal_row(n), max_depth, target=f"row n={n}")


def column_target(k: int, max_n: int) -> Certificate:
    """Closed forms and low-order nonnegativity on a finite column window."""
    col = seqlab.pascal_column(k, max_n)
    levels = [col]
    for _ in range(4):
        levels.append(seqlab.l_step(levels[-1]))
    checks: dict = {}
    # level i is exact on the first len - i entries of the window
    for i in range(1, 5):
        checks[f"L{i}_nonneg"] = seqlab.is_nonneg(levels[i], len(col) - i)[0]
    if k == 0:
        checks["L_is_unit"] = all(levels[i][:len(col) - i] == (1,) + (0,) * (len(col) - i - 1)
                                  for i in range(1, 5))
    elif k == 1:
        checks["L_is_ones"] = levels[1][:len(col) - 1] == (1,) * (len(col) - 1)
    elif k == 2:
        checks["fixed_point"] = levels[1][:len(col) - 1] == col[:len(col) - 1]
    if k >= 2:
        ok1 = ok2 = True
        for idx in range(len(col) - 2):
            n = k + idx
            if n < 2:
                continue
            first, second = seqlab.column_closed_forms(n, k)
            ok1 &= levels[1][idx] == first
            ok2 &= levels[2][idx] == second
        checks["L1_closed_form"] = ok1
        checks["L2_closed_form"] = ok2
    if k >= 3:
        checks["L3_sign_matches"] = all(
            (levels[3][idx] > 0) == (seqlab.l3_positivity_poly(k, k + idx) > 0)
            for idx in range(len(col) - 3))
    status = _status(all(checks.values()))
    return Certificate(f"column k={k} n<={max_n}", status, depth=4, details=checks)


def line_target(n: int, u: int, v: int, max_depth: int) -> Certificate:
    return seqlab.certify_infinite_lc(seqlab.finite_line(n, u, v), max_depth,
                                      target=f"line n={n} u={u} v={v}")


def vandermonde_target(u: int, v: int) -> Certificate:
    fails = seqlab.vandermonde_refute(u, v)
    return Certificate(f"only-if u={u} v={v}", REFUTED if fails else INCONCLUSIVE,
                       depth=1, failure_index=(1, 1) if fails else None,
                       details={"square": comb(u, v) ** 2, "next": comb(2 * u, 2 * v)})


def diagonal_target(n: int, u: int, length: int, max_depth: int) -> Certificate:
    seq = seqlab.pascal_line(seqlab.LineSpec(n, u, u, length))
    cert = seqlab.certify_infinite_lc(seq, max_depth, target=f"diagonal n={n} u={u}", truncated=True)
    cert.details["window"] = length
    return cert


def boros_moll_target(m: int, max_depth: int) -> Certificate:
    d = seqlab.boros_moll_coeffs(m)
    cert = seqlab.certify_infinite_lc(d, max_depth, target=f"boros-moll m={m}")
    p = polyroots.poly_from_seq(d)
    cert.details["real_roots"] = polyroots.count_real_roots(polyroots.squarefree_part(p))
    if m <= 3:
        cert.details["coefficients"] = list(d)
    return cert


def region_target(m: int, parity: str, seed: int, index: int) -> Certificate:
    """Sample one point near a hypersurface; accepted points must certify."""
    rng = random.Random(f"{seed}:{m}:{parity}:{index}")
    D = rng.randint(max(2, m), m + 4)
    rest = sorted(rng.sample(range(1, D), m - 1), reverse=True)
    d = (Fraction(1),) + tuple(Fraction(x, D) for x in rest)
    x = Fraction(rng.randint(2, 4)) if rng.random() < 0.7 else Fraction(rng.randint(5, 9), 4)
    params = region.RegionParams(m, parity, x, d)
    k = rng.randint(1, m)
    bump = Fraction(rng.randint(10, 30), 10)
    coords = region.sample_near_hypersurface(params, k, bump)
    target = f"region m={m} {parity} sample={index}"
    details = {"k": k, "coords": list(coords)}
    if not region.in_region(coords, parity):
        details["accepted"] = False
        return Certificate(target, INCONCLUSIVE, details=details)
    details["accepted"] = True
    seq = region.point_to_sequence(coords, parity)
    if parity == region.EVEN:
        bad = [k for k in range(1, len(seq) - 1)
               if not r0_factor_holds(seq[k - 1], seq[k], seq[k + 1])]
        if not bad:
            return Certificate(target, CERTIFIED, r0_level=0, details=details)
        return Certificate(target, REFUTED, failure_index=(0, bad[0]), details=details)
    cert = seqlab.certify_symmetric_odd(seq, target)
    if cert.status != CERTIFIED:
        # unreachable while in_region and the lemma agree; kept as a tripwire
        cert.status = REFUTED
        cert.failure_index = (0, cert.details["index"])
    cert.details.update(details)
    return cert


# --- q-analogues -----------------------------------------------------------

def gauss_row_target(n: int, max_depth: int) -> Certificate:
    cert = qlab.certify_q_infinite_lc(qlab.gauss_row(n), max_depth, target=f"gauss row n={n}")
    second = qlab.ql_step(qlab.ql_step(qlab.gauss_row(n)))
    c, e = mint(second[n // 2])
    cert.details["middle_mint_coeff"] = c
    cert.details["middle_mint_exp"] = e
    return cert


def quantum_row_target(n: int, max_depth: int) -> Certificate:
    return qlab.certify_q_infinite_lc(qlab.quantum_row(n), max_depth, target=f"quantum row n={n}")


def _q_line_target(kind: str, n: int, u: int, v: int, max_depth: int, length: int) -> Certificate:
    binom = qlab.gauss_binom if kind == "gauss" else qlab.quantum_binom
    target = f"{kind} line n={n} u={u} v={v}"
    if u < v:
        size = seqlab.line_support(n, u, v)
        cert = qlab.certify_q_infinite_lc(qlab.q_line(binom, n, u, v, size), max_depth, target)
    else:
        seq = qlab.q_line(binom, n, u, v, length)
        cert = qlab.certify_q_infinite_lc(seq, max_depth, target, truncated=True)
        cert.details["window"] = length
    if u > v:
        if kind == "gauss":
            cert.details["top_coeff"] = qlab.gauss_top_coefficient(n, u, v)
        else:
            cert.details["bottom_coeff"] = qlab.quantum_bottom_coefficient(n, u, v)
    return cert


def gauss_line_target(n, u, v, max_depth, length):
    return _q_line_target("gauss", n, u, v, max_depth, length)


def quantum_line_target(n, u, v, max_depth, length):
    return _q_line_target("quantum", n, u, v, max_depth, length)


def llq_target(n: int, k: int) -> Certificate:
    rep = qlab.llq_resolver(n, k)
    ok = rep["q_equals_1"] and (rep["literal"] or rep["corrected"])
    narayana = qlab.q_narayana_check(n, k)
    return Certificate(f"llq n={n} k={k}", _status(ok and narayana),
                       details={**rep, "narayana": narayana})


# --- symmetric functions ---------------------------------------------------

def kirillov_target(k: int, r: int) -> Certificate:
    return Certificate(f"kirillov k={k} r={r}", _status(symlab.verify_kirillov(k, r)))


def l4_witness_target(k: int) -> Certificate:
    value = symlab.l4_negative_witness(k)
    screen = symlab.dominance_screen(k)
    return Certificate(f"l4 witness k={k}", REFUTED if value < 0 else INCONCLUSIVE, depth=4,
                       failure_index=(4, k) if value < 0 else None,
                       details={"m_coeff": value, "partition": list(screen["witness"]),
                                "table_matches": screen["table_matches"],
                                "screen_passes": screen["screen_passes"]})


def identities_target(k: int) -> Certificate:
    seq = symlab.h_sequence(k + 3)
    checks = {}
    for level in range(1, 4):
        seq = symlab.l_step_h(seq)
        checks[f"L{level}"] = seq[k] == symlab.l_closed(level, k)
    return Certificate(f"h-identities k={k}", _status(all(checks.values())), depth=3, details=checks)


# --- real roots and matrices -----------------------------------------------

def pla_row_target(n: int, depth: int) -> Certificate:
    return polyroots.check_pla_chain(seqlab.pascal_row(n), depth, target=f"real-rooted row n={n}")


def pla_fuzz_target(seed: int, max_degree: int, depth: int) -> Certificate:
    deg = 1 + seed % max_degree
    seq = polyroots.random_real_rooted(deg, seed)
    cert = polyroots.check_pla_chain(seq, depth, target=f"fuzz seed={seed} deg={deg}")
    if cert.status == REFUTED:
        cert.details["counterexample"] = list(seq)
    return cert


def fallat_target(t: str, which: str, max_order: int | None) -> Certificate:
    """Total nonnegativity of the 5x5 example (``which="A"``) or of its
    adjacent-minor matrix (``which="L"``)."""
    A = tnnlab.fallat_example(Fraction(t))
    M = A if which == "A" else tnnlab.l_matrix(A)
    order = None if max_order is None else min(max_order, M.rows)
    ok, wit = tnnlab.all_minors_nonneg(M, order)
    return Certificate(f"fallat {which} t={t}", _status(ok),
                       failure_index=None if ok else (1, 0),
                       details={"minors": tnnlab.minor_count(M, order or M.rows), "witness": _wit(wit)})


def _wit(w):
    if w is None:
        return None
    rows, cols, value = w
    return {"rows": list(rows), "cols": list(cols), "value": value}


def random_tnn(n: int, rng: random.Random) -> tnnlab.ExactMatrix:
    """A product of nonnegative elementary bidiagonal factors and a positive diagonal."""
    M = tnnlab.identity(n)
    for _ in range(rng.randint(1, 3 * n)):
        i = rng.randrange(n - 1)
        a = Fraction(rng.randint(0, 6), rng.randint(1, 3))
        E = [[int(r == c) for c in range(n)] for r in range(n)]
        if rng.random() < 0.5:
            E[i + 1][i] = a
        else:
            E[i][i + 1] = a
        M = M @ tnnlab.ExactMatrix(E)
    D = tnnlab.ExactMatrix([[Fraction(rng.randint(1, 4)) if r == c else 0 for c in range(n)]
                            for r in range(n)])
    return M @ D


def small_tnn_target(seed: int, index: int) -> Certificate:
    rng = random.Random(f"tnn:{seed}:{index}")
    A = random_tnn(4, rng)
    ok_a = tnnlab.is_tnn(A)
    ok_l, wit = tnnlab.all_minors_nonneg(tnnlab.l_matrix(A))
    return Certificate(f"tnn4 sample={index}", _status(ok_a and ok_l), details={"witness": _wit(wit)})


def random_psd(n: int, rng: random.Random) -> tnnlab.ExactMatrix:
    k = rng.randint(1, n)
    B = tnnlab.ExactMatrix([[rng.randint(-4, 4) for _ in range(n)] for _ in range(k)])
    return B.transpose() @ B


def _psd(A) -> bool:
    return tnnlab.is_psd(A) if A.rows <= tnnlab.PSD_MINOR_GUARD else tnnlab.is_psd_ldl(A)


def psd_target(seed: int, index: int, max_size: int) -> Certificate:
    rng = random.Random(f"psd:{seed}:{index}")
    n = rng.randint(2, max_size)
    A = random_psd(n, rng)
    checks = {"A": _psd(A), "compound2": _psd(tnnlab.compound2(A)), "l_matrix": _psd(tnnlab.l_matrix(A))}
    return Certificate(f"psd n={n} sample={index}", _status(all(checks.values())), details=checks)


def asw_target(n: int, size: int) -> Certificate:
    rep = tnnlab.asw_crosscheck(seqlab.pascal_row(n), size)
    rep["witness"] = _wit(rep["witness"])
    return Certificate(f"asw row n={n}", _status(rep["consistent"]), details=rep)


def run_task(task: Task) -> list[Certificate]:
    from .errors import ResourceLimit

    func = globals()[task.func]
    try:
        out = func(*task.args)
    except ResourceLimit as exc:
        return [Certificate(f"{task.func}{task.args}", INCONCLUSIVE,
                            details={"resource_limit": str(exc)})]
    return out if isinstance(out, list) else [out]
