"""Closed-form lower bounds on the expansivity gap of integer polynomials.

Every bound is an upper bound on ``1 / (|alpha| - 1)`` over roots alpha, split
by real and non-real roots, and is computed exactly (int or Fraction).
Families:

``A``   Liouville-type, uses |a_0| only
``AZ``  uses |a_0| + |a_n|
``H``   uses the height
``L``   uses the length
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .expansivity import check_d_conditions
from .poly import PolynomialError, as_poly, measures

FAMILIES = ("A", "AZ", "H", "L")

Bound = Fraction


@dataclass(frozen=True)
class BoundPair:
    real: Bound
    complex: Bound | None  # None for degree 1: no non-real roots exist


def _deg(f):
    f = as_poly(f).trim()
    n = f.n
    if n < 1:
        raise PolynomialError("bounds need degree >= 1")
    return f, n


def bound_a(f) -> BoundPair:
    f, n = _deg(f)
    a0 = abs(f[0])
    cplx = Fraction(2 ** comb(n, 2) * a0 ** (n - 1) + 1) if n >= 2 else None
    return BoundPair(Fraction(2 ** (n - 1) * a0), cplx)


def bound_az(f) -> BoundPair:
    f, n = _deg(f)
    s = abs(f[0]) + abs(f[n])
    # 2**(n-2) is 1/2 for n = 1; kept exact
    real = Fraction(s) * Fraction(2) ** (n - 2)
    cplx = Fraction(2 ** comb(n - 1, 2) * s ** (n - 1) + 1) if n >= 2 else None
    return BoundPair(real, cplx)


def bound_height(f) -> BoundPair:
    f, n = _deg(f)
    h = measures(f).height
    real = comb(n + 1, 2) * h + Fraction(n, 2)
    cplx = Fraction(comb(n, 2) * factorial(n) * h ** (n - 1) + comb(n, 2) + 1) if n >= 2 else None
    return BoundPair(Fraction(real), cplx)


def bound_length(f) -> BoundPair:
    f, n = _deg(f)
    ell = measures(f).length
    real = Fraction(n * ell + n)
    cplx = Fraction(2 * comb(n, 2) * ell ** (n - 1) + 2 * comb(n, 2) + 1) if n >= 2 else None
    return BoundPair(real, cplx)


BOUND_FUNCS = {"A": bound_a, "AZ": bound_az, "H": bound_height, "L": bound_length}


def _best(values: dict[str, Bound | None]) -> str | None:
    best = None
    for fam in FAMILIES:  # strict '<' keeps the earlier family on ties
        v = values[fam]
        if v is not None and (best is None or v < values[best]):
            best = fam
    return best


@dataclass(frozen=True)
class GapBoundReport:
    n: int
    bounds: dict[str, BoundPair] = field(default_factory=dict)
    best_real: str = "A"
    best_complex: str | None = None

    @property
    def implied_gap_real(self) -> Fraction:
        return 1 / self.bounds[self.best_real].real

    @property
    def implied_gap_complex(self) -> Fraction | None:
        if self.best_complex is None:
            return None
        return 1 / self.bounds[self.best_complex].complex

    @property
    def combined(self) -> Fraction:
        """Max of the two column minima: bounds 1/(|alpha|-1) for every root."""
        vals = [self.bounds[self.best_real].real]
        if self.best_complex is not None:
            vals.append(self.bounds[self.best_complex].complex)
        return max(vals)

    def to_dict(self) -> dict:
        def q(x):
            return None if x is None else str(x)

        return {
            "n": self.n,
            "bounds": {
                fam: {"real": q(p.real), "complex": q(p.complex)} for fam, p in self.bounds.items()
            },
            "best_real": self.best_real,
            "best_complex": self.best_complex,
            "implied_gap_real": q(self.implied_gap_real),
            "implied_gap_complex": q(self.implied_gap_complex),
            "combined_bound": q(self.combined),
        }


def best_bound_report(f) -> GapBoundReport:
    f, n = _deg(f)
    v = check_d_conditions(f)
    if not v.expansive:
        raise PolynomialError(f"polynomial is not expansive ({v.witness})")
    bounds = {fam: fn(f) for fam, fn in BOUND_FUNCS.items()}
    best_real = _best({fam: p.real for fam, p in bounds.items()})
    best_complex = _best({fam: p.complex for fam, p in bounds.items()}) if n >= 2 else None
    return GapBoundReport(n=n, bounds=bounds, best_real=best_real, best_complex=best_complex)


@dataclass(frozen=True)
class LiouvilleQuery:
    g: object  # test polynomial, nonzero
    f: object  # expansive polynomial


def liouville_rhs(q: LiouvilleQuery) -> int:
    """``L(g)**(n-1) * |a_0|**deg(g)``, bounding ``1/|g(alpha)|`` for roots alpha of expansive f."""
    g = as_poly(q.g)
    if g.is_zero():
        raise PolynomialError("g must be nonzero")
    g = g.trim()
    f = as_poly(q.f).trim()
    return measures(g).length ** (f.n - 1) * abs(f[0]) ** g.n
