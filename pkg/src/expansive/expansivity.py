"""Exact expansivity decisions.

Two independent engines decide whether every root of an integer polynomial
lies strictly outside the unit circle:

* the D-condition test: signs of small structured determinants, evaluated
  with fraction-free elimination so coefficient sizes stay polynomial;
* the classical Schur-Cohn chain, whose coefficients double in size per step.

Both work on the pseudo-degree ``f.n``; a zero top coefficient behaves like
a root at infinity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .linalg import ExactMatrix, bareiss_determinant
from .poly import (
    IntPolynomial,
    PolynomialError,
    as_poly,
    as_rational,
    evaluate_int,
    normalize_sign,
    scale_argument,
    schur_transform,
)

ALL_PASSED = "all conditions passed"
SIGNS = ("+", "-")


@dataclass(frozen=True)
class DMatrixSpec:
    k: int
    sign: str  # "+" or "-"
    n: int | None = None  # defaults to the polynomial's pseudo-degree

    def __post_init__(self):
        if self.sign not in SIGNS:
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")


@dataclass(frozen=True)
class ExpansivityVerdict:
    expansive: bool
    method: str
    witness: str
    conditions_checked: int

    def to_dict(self) -> dict:
        return {
            "expansive": self.expansive,
            "method": self.method,
            "witness": self.witness,
            "conditions_checked": self.conditions_checked,
        }


@dataclass(frozen=True)
class RootCountReport:
    inside: int
    on_circle_detected: bool
    outside: int


def build_d_matrix(f, spec: DMatrixSpec) -> ExactMatrix:
    """k x k matrix with entries ``a_{j-i} +/- a_{i+j+n-k-1}`` (1-based i, j)."""
    f = as_poly(f)
    n = f.n if spec.n is None else spec.n
    k = spec.k
    if not 1 <= k <= n:
        raise PolynomialError(f"k={k} outside [1, {n}]")
    sgn = 1 if spec.sign == "+" else -1
    a = f.__getitem__
    return ExactMatrix(
        [[a(j - i) + sgn * a(i + j + n - k - 1) for j in range(1, k + 1)] for i in range(1, k + 1)]
    )


def d_determinant(f: IntPolynomial, k: int, sign: str) -> int:
    return bareiss_determinant(build_d_matrix(f, DMatrixSpec(k, sign)))[0]


def _prepare(f) -> tuple[IntPolynomial | None, str]:
    norm = normalize_sign(as_poly(f))
    if norm.zero_constant:
        return None, "a_0 = 0"
    return norm.poly, ""


STRATEGIES = ("full", "reduced", "alternate")


def _d_condition_plan(n: int, strategy: str):
    """Yield condition descriptors in check order: cheap ones first."""
    for s in SIGNS:
        yield ("D", 1, s)
    if strategy == "alternate":
        # D_k for k = n, n-2, ... with no f(+-1) shortcut
        ks = sorted(k for k in range(n, 1, -2))
    else:
        for s in SIGNS:
            yield ("f", None, s)
        if strategy == "full":
            ks = range(2, n)
        else:
            ks = sorted(k for k in range(n - 1, 1, -2))
    for k in ks:
        for s in SIGNS:
            yield ("D", k, s)


def check_d_conditions(f, strategy: str = "full") -> ExpansivityVerdict:
    """Decide expansivity from the signs of the D-determinants.

    ``full`` checks D_1, f(+-1), then D_k for k = 2..n-1; ``reduced`` keeps
    D_1 and f(+-1) and only k = n-1, n-3, ... above that; ``alternate`` checks
    D_1 and then D_k for k = n, n-2, ... without f(+-1). Stops at the first
    non-positive value.
    """
    method = f"d-conditions-{strategy}"
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    g, why = _prepare(f)
    if g is None:
        return ExpansivityVerdict(False, method, why, 0)
    n = g.n
    if n == 0:
        return ExpansivityVerdict(True, method, ALL_PASSED, 0)
    checked = 0
    for kind, k, s in _d_condition_plan(n, strategy):
        checked += 1
        if kind == "f":
            value = evaluate_int(g, 1 if s == "+" else -1)
            label = f"f({'' if s == '+' else '-'}1)"
        else:
            value = d_determinant(g, k, s)
            label = f"D_{k}^{s}"
        if value <= 0:
            return ExpansivityVerdict(False, method, f"{label} = {value}", checked)
    return ExpansivityVerdict(True, method, ALL_PASSED, checked)


def schur_chain(f) -> list[IntPolynomial]:
    """The full Schur chain down to a constant, with no early exit."""
    g = as_poly(f)
    chain = [g]
    while g.n >= 1:
        g = schur_transform(g)
        chain.append(g)
    return chain


def check_schur_cohn(f) -> ExpansivityVerdict:
    method = "schur-cohn"
    g, why = _prepare(f)
    if g is None:
        return ExpansivityVerdict(False, method, why, 0)
    step = 0
    while g.n >= 1:
        a0, an = g[0], g[g.n]
        if not abs(an) < abs(a0):
            return ExpansivityVerdict(
                False, method, f"|a_n| >= |a_0| at step {step} ({abs(an)} >= {abs(a0)})", step + 1
            )
        g = schur_transform(g)
        step += 1
    return ExpansivityVerdict(True, method, ALL_PASSED, step)


def count_roots_inside_unit(f) -> RootCountReport:
    """Count roots with |z| < 1 (with multiplicity) along the Schur chain.

    When some iterate has |a_n| = |a_0| neither counting rule applies; the
    report then sets ``on_circle_detected`` and ``inside``/``outside`` are only
    lower bounds, propagated from the steps above the degenerate one.
    """
    f = as_poly(f)
    if f.is_zero():
        raise PolynomialError("zero polynomial")
    f = f.trim()
    branches = []  # True where |a_n| < |a_0|
    g = f
    degenerate = False
    while g.n >= 1:
        a0, an = abs(g[0]), abs(g[g.n])
        if an == a0:
            degenerate = True
            break
        branches.append(an < a0)
        g = schur_transform(g)
    # (inside, outside) of the last iterate reached; a constant has no roots
    inside, outside = 0, 0
    for smaller in reversed(branches):
        # one step up the chain adds one root; '>' also swaps inside/outside
        if smaller:
            inside, outside = inside, outside + 1
        else:
            inside, outside = outside + 1, inside
    return RootCountReport(inside=inside, on_circle_detected=degenerate, outside=outside)


def coefficient_bound_filter(f) -> bool:
    """Necessary conditions: |a_n| < |a_0| and the binomial bounds on inner coefficients."""
    f = as_poly(f)
    n = f.n
    a0, an = abs(f[0]), abs(f[n])
    if not an < a0:
        return False
    return all(
        abs(f[k]) < comb(n - 1, k - 1) * an + comb(n - 1, k) * a0 for k in range(1, n)
    )


def roots_outside_radius(f, s, strategy: str = "full") -> ExpansivityVerdict:
    """True iff every root of f satisfies |alpha| > s (s > 0 rational)."""
    s = as_rational(s)
    if s <= 0:
        raise PolynomialError("radius must be positive")
    return check_d_conditions(scale_argument(as_poly(f), s), strategy)


def certified_gap(f, tol) -> Fraction:
    """Bisect for ``s_low >= 1`` with all roots beyond ``s_low`` but not beyond ``s_low + tol``.

    The expansivity gap then lies in ``[s_low - 1, s_low - 1 + tol)``.
    """
    f = as_poly(f).trim()
    tol = as_rational(tol)
    if tol <= 0:
        raise PolynomialError("tolerance must be positive")
    v = check_d_conditions(f)
    if not v.expansive:
        raise PolynomialError(f"polynomial is not expansive ({v.witness})")
    lo = Fraction(1)
    # the smallest root modulus is at most (|a_0|/|a_n|)**(1/n) <= |a_0|/|a_n|
    hi = Fraction(abs(f[0]), abs(f[f.n]))
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if roots_outside_radius(f, mid).expansive:
            lo = mid
        else:
            hi = mid
    return lo
