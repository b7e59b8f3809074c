"""D-polynomials, the pair-product polynomial and the resultant F(x).

Determinants with polynomial entries are never eliminated symbolically.
Instead they are evaluated exactly at integer nodes with the Bareiss kernel
and the coefficient vector is recovered by exact interpolation; the degree
bounds (k*n for D-polynomials, n**2 for F) are known in advance.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from .expansivity import DMatrixSpec, build_d_matrix
from .linalg import ExactMatrix, bareiss_determinant
from .poly import IntPolynomial, PolynomialError, as_poly, strip_zeros, substitute_power

MAX_TERM_COUNT_N = 8


@dataclass(frozen=True)
class SymbolicPoly:
    coeffs: tuple[int, ...]
    degree_bound: int

    def __init__(self, coeffs: Iterable[int], degree_bound: int):
        object.__setattr__(self, "coeffs", tuple(strip_zeros(list(coeffs))))
        object.__setattr__(self, "degree_bound", degree_bound)

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def default_nodes(count: int) -> list[int]:
    """0, 1, -1, 2, -2, ... (count of them)."""
    nodes = [0]
    m = 1
    while len(nodes) < count:
        nodes.append(m)
        if len(nodes) < count:
            nodes.append(-m)
        m += 1
    return nodes


def interpolate(nodes: Sequence[int], values: Sequence[int]) -> list[int]:
    """Exact interpolation via Newton divided differences; the result must be integral."""
    if len(nodes) != len(values) or len(set(nodes)) != len(nodes):
        raise ValueError("need distinct nodes, one value each")
    m = len(nodes)
    dd = [Fraction(v) for v in values]
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level])
    # Horner-style expansion of the Newton form
    coeffs = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # coeffs <- coeffs * (x - nodes[i]) + dd[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - nodes[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError(f"interpolated coefficient {c} is not an integer")
        out.append(c.numerator)
    return out


def _interpolate_det(builder: Callable[[int], ExactMatrix], degree: int, nodes=None) -> list[int]:
    nodes = default_nodes(degree + 1) if nodes is None else list(nodes)
    if len(nodes) < degree + 1:
        raise ValueError(f"need at least {degree + 1} nodes")
    values = [bareiss_determinant(builder(y))[0] for y in nodes]
    return interpolate(nodes, values)


def d_polynomial(f, spec: DMatrixSpec, nodes=None) -> SymbolicPoly:
    """Coefficients of the D-determinant with every a_j replaced by a_j x**j."""
    f = as_poly(f)
    n = f.n if spec.n is None else spec.n
    spec = DMatrixSpec(spec.k, spec.sign, n)
    bound = spec.k * n
    cs = _interpolate_det(lambda y: build_d_matrix(substitute_power(f, y), spec), bound, nodes)
    return SymbolicPoly(cs, bound)


def pair_product_polynomial(f) -> SymbolicPoly:
    """Polynomial of degree C(n,2) whose roots are the products alpha_i alpha_j, i < j.

    Obtained from the (n-1)-th minus D-polynomial, which only has even powers.
    """
    f = as_poly(f)
    n = f.n
    if n < 2:
        raise PolynomialError("pair products need degree >= 2")
    d = d_polynomial(f, DMatrixSpec(n - 1, "-"))
    odd = [i for i in range(1, len(d.coeffs), 2) if d.coeffs[i]]
    if odd:
        raise ArithmeticError(f"odd powers {odd} present in D_(n-1)^- polynomial")
    return SymbolicPoly(d.coeffs[::2], comb(n, 2))


def resultant_matrix(f: IntPolynomial, x: int) -> ExactMatrix:
    """The 2n x 2n Sylvester-style matrix whose determinant is (-1)**n F(x)."""
    n = f.n
    rows = []
    for i in range(1, 2 * n + 1):
        row = []
        for j in range(1, n + 1):
            d = i - j
            row.append(f[d] * x**d if 0 <= d <= n else 0)
        for j in range(n + 1, 2 * n + 1):
            d = j - i
            row.append(f[d] if 0 <= d <= n else 0)
        rows.append(row)
    return ExactMatrix(rows)


def resultant_pair_product(f, nodes=None) -> SymbolicPoly:
    """F(x) = a_n**(2n) prod_{i,j} (x - alpha_i alpha_j), degree n**2."""
    f = as_poly(f)
    n = f.n
    if n < 1:
        raise PolynomialError("need degree >= 1")
    cs = _interpolate_det(lambda y: resultant_matrix(f, y), n * n, nodes)
    if n % 2:
        cs = [-c for c in cs]
    return SymbolicPoly(cs, n * n)


@dataclass(frozen=True)
class TermCountReport:
    n: int
    raw_terms: int
    collected_terms: int
    matching_convention: str | None = None


# raw signed-product counts reproduce the known list 1, 2, 4, 12, 40
KNOWN_T = (1, 2, 4, 12, 40)


def _perm_sign(p: Sequence[int]) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def term_count(n: int) -> TermCountReport:
    """Count the terms of the (n-1)-th minus D-determinant over formal a_0..a_n.

    ``raw_terms`` counts every signed product after expanding each
    ``a_i - a_j`` entry; ``collected_terms`` counts distinct monomials with
    nonzero coefficient.
    """
    if not 1 <= n <= MAX_TERM_COUNT_N:
        raise ValueError(f"n must be in [1, {MAX_TERM_COUNT_N}]")
    k = n - 1

    def entry(i, j):
        terms = []
        lo, hi = j - i, i + j + n - k - 1
        if 0 <= lo <= n:
            terms.append((1, lo))
        if 0 <= hi <= n:
            terms.append((-1, hi))
        return terms

    entries = [[entry(i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    raw = 0
    collected: dict[tuple[int, ...], int] = defaultdict(int)
    for perm in itertools.permutations(range(k)):
        sign = _perm_sign(perm)
        factors = [entries[i][perm[i]] for i in range(k)]
        for combo in itertools.product(*factors):
            c = sign
            for cc, _ in combo:
                c *= cc
            raw += 1
            collected[tuple(sorted(idx for _, idx in combo))] += c
    coll = sum(1 for v in collected.values() if v)
    convention = None
    if n <= len(KNOWN_T):
        target = KNOWN_T[n - 1]
        if raw == target:
            convention = "raw"
        elif coll == target:
            convention = "collected"
    assert coll <= raw <= factorial(n)
    return TermCountReport(n=n, raw_terms=raw, collected_terms=coll, matching_convention=convention)
