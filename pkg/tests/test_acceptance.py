"""Acceptance gate: one recorded pass/fail line per criterion.

Each test records its outcome before asserting, so the terminal summary shows
every criterion even when one of them fails.
"""
import itertools
import math
import random
from fractions import Fraction
from math import factorial

from acceptance_log import record
from oracles import compose_square, match_multisets, negate_arg, pmul, trim
from sweeps import random_poly

from expansive import (
    BenchConfig,
    DMatrixSpec,
    EnumerationSpec,
    bench_growth,
    certified_gap,
    check_d_conditions,
    d_polynomial,
    enumerate_expansive,
    find_roots_numeric,
    numeric_expansive,
    numeric_gap,
    pair_product_polynomial,
    resultant_pair_product,
    term_count,
)
from expansive.bounds import BOUND_FUNCS, bound_a, bound_az
from expansive.expansivity import d_determinant
from expansive.poly import IntPolynomial, evaluate_int


def test_1_engine_agreement(sweep):
    bad, conclusive = [], 0
    for row in sweep:
        alt = check_d_conditions(row.coeffs, "alternate").expansive
        if not (row.full == row.reduced == row.schur == alt):
            bad.append(row.coeffs)
        if row.numeric != "inconclusive":
            conclusive += 1
            if row.numeric != row.full:
                bad.append(row.coeffs)
    record(1, "engine agreement sweep", not bad,
           f"{len(sweep)} polynomials, {conclusive} oracle-conclusive, {len(bad)} disagreements")
    assert not bad, bad[:5]


def test_2_forward_direction(sweep):
    bad, n_exp = [], 0
    for row in sweep:
        if not row.full:
            continue
        n_exp += 1
        f = IntPolynomial(row.coeffs)
        if any(d_determinant(f, k, s) <= 0 for k in range(1, f.n + 1) for s in "+-"):
            bad.append(row.coeffs)
    record(2, "expansive implies all D_k > 0", not bad, f"{n_exp} expansive, {len(bad)} violations")
    assert not bad


def test_3_exact_identities():
    rng = random.Random(303)
    bad = []
    for _ in range(200):
        n = rng.randint(1, 5)
        f = random_poly(rng, n, 10)
        g = IntPolynomial(f)
        dm = d_determinant(g, n - 1, "-") if n >= 2 else 1
        if d_determinant(g, n, "+") != evaluate_int(g, 1) * dm:
            bad.append((f, "D_n^+"))
        if d_determinant(g, n, "-") != evaluate_int(g, -1) * dm:
            bad.append((f, "D_n^-"))
        F2 = compose_square(resultant_pair_product(f).to_list())
        sgn = (-1) ** n
        dp = d_polynomial(f, DMatrixSpec(n, "+")).to_list()
        dmp = d_polynomial(f, DMatrixSpec(n, "-")).to_list()
        if trim(F2) != trim([sgn * c for c in pmul(dp, dmp)]):
            bad.append((f, "F = D+ D-"))
        dn1 = d_polynomial(f, DMatrixSpec(n - 1, "-")).to_list() if n >= 2 else [1]
        rhs = pmul(pmul(list(f), negate_arg(list(f))), pmul(dn1, dn1))
        if trim(F2) != trim([sgn * c for c in rhs]):
            bad.append((f, "F = f(x)f(-x)D^2"))
    record(3, "exact identities on 200 random polynomials", not bad, f"{len(bad)} failures")
    assert not bad, bad[:5]


def _well_separated(values, gap):
    return all(abs(a - b) >= gap for a, b in itertools.combinations(values, 2))


def test_4_d_polynomial_structure():
    rng = random.Random(404)
    bad, pair_checked = [], 0
    for _ in range(200):
        n = rng.randint(1, 5)
        f = random_poly(rng, n, 10)
        a0, an = f[0], f[-1]
        for k in range(1, n + 1):
            for s in "+-":
                d = d_polynomial(f, DMatrixSpec(k, s))
                cs = list(d.coeffs) + [0] * (k * n + 1 - len(d.coeffs))
                if cs[0] != a0**k or abs(cs[k * n]) != abs(an) ** k or len(d.coeffs) != k * n + 1:
                    bad.append((f, k, s, "ends"))
                if (k - (n - 1)) % 2 == 0 and any(cs[1::2]):
                    bad.append((f, k, s, "odd"))
    while pair_checked < 50:
        n = rng.randint(2, 5)
        f = random_poly(rng, n, 10)
        roots = find_roots_numeric(f).roots
        prods = [a * b for a, b in itertools.combinations(roots, 2)]
        if not _well_separated(roots, 0.1) or not _well_separated(prods, 0.1) or min(map(abs, roots)) < 0.1:
            continue
        got = find_roots_numeric(pair_product_polynomial(f).to_list()).roots
        scale = max(1.0, max(abs(p) for p in prods))
        if match_multisets(prods, got) / scale > 1e-6:
            bad.append((f, "pair roots"))
        pair_checked += 1
    record(4, "D-polynomial structure and pair-product roots", not bad,
           f"{pair_checked} pair-product checks, {len(bad)} failures")
    assert not bad, bad[:5]


def test_5_gap_bound_soundness(sweep):
    bad, roots_checked = [], 0
    for row in sweep:
        if not row.full:
            continue
        f = row.coeffs
        pairs = {fam: fn(f) for fam, fn in BOUND_FUNCS.items()}
        for z in find_roots_numeric(f).roots:
            roots_checked += 1
            inv = 1 / (abs(z) - 1)
            for fam, p in pairs.items():
                b = p.real if z.imag == 0 else p.complex
                if not inv <= float(b) * (1 + 1e-6):
                    bad.append((f, fam, z))
        az, a = bound_az(f), bound_a(f)
        if not az.real < a.real or (az.complex is not None and not az.complex < a.complex):
            bad.append((f, "AZ < A"))
    record(5, "gap-bound soundness and AZ < A", not bad, f"{roots_checked} roots, {len(bad)} violations")
    assert not bad, bad[:5]


def test_6_term_counts():
    expected = [1, 2, 4, 12, 40]
    reports = [term_count(n) for n in range(1, 9)]
    raw = [r.raw_terms for r in reports[:5]]
    collected = [r.collected_terms for r in reports[:5]]
    ok = (raw == expected or collected == expected) and all(r.raw_terms <= factorial(r.n) for r in reports)
    record(6, "term counts 1, 2, 4, 12, 40 and raw <= n!", ok, f"raw {raw}, collected {collected}")
    assert ok


def test_7_sharpness_family():
    tol = Fraction(1, 10**9)
    ratios, bad = [], []
    for A in (2, 10, 100, 1000):
        f = [-A, 0, A - 1]
        s = certified_gap(f, tol)
        g = numeric_gap(f)
        if not float(s) - 1 - 1e-12 <= g <= float(s + tol) - 1 + 1e-12:
            bad.append((A, float(s) - 1, g))
        true_gap = math.sqrt(A / (A - 1)) - 1
        ratios.append(float(bound_a(f).real) * true_gap)
    ok = not bad and all(1 / 8 <= r <= 8 for r in ratios) and max(ratios) / min(ratios) <= 8
    record(7, "sharpness family (A-1)x^2 - A", ok, "ratios " + ", ".join(f"{r:.4f}" for r in ratios))
    assert ok, (bad, ratios)


def test_8_coefficient_growth():
    prof = bench_growth(BenchConfig(degree=12, height=2**32, trials=5, seed=0))
    med = prof.schur_median
    increasing = all(b > a for a, b in zip(med, med[1:]))
    step_ratios = [med[i] / med[i - 1] for i in range(2, len(med))]
    excess = prof.bareiss_excess()
    ok = increasing and all(r >= 1.5 for r in step_ratios) and excess <= 12
    record(8, "Schur growth vs Bareiss entry bound", ok,
           f"min step ratio {min(step_ratios):.3f}, max Bareiss excess {excess} bits")
    assert ok, (med, step_ratios, excess)


def test_9_census():
    got = enumerate_expansive(EnumerationSpec(2, 2)).polynomials
    brute = sorted(
        (2, a1, a2) for a1 in range(-8, 9) for a2 in range(-8, 9)
        if a2 != 0 and numeric_expansive([2, a1, a2]) is True
    )
    lin = enumerate_expansive(EnumerationSpec(1, 2)).polynomials
    ok = got == brute and len(got) == 6 and lin == [(2, -1), (2, 1)]
    record(9, "census matches brute force", ok, f"n=2: {len(got)} found, {len(brute)} by brute force")
    assert ok, (got, brute, lin)
