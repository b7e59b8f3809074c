"""Exhaustive census of expansive integer polynomials with given degree and a_0.

Candidates come from the box cut out by the necessary conditions
``0 < |a_n| < a_0`` and ``|a_k| < C(n-1,k-1)|a_n| + C(n-1,k) a_0``; each one is
then decided by the D-condition engine. Only a_0 > 0 is enumerated, since
negating a polynomial does not move its roots.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, prod

from .expansivity import check_d_conditions, coefficient_bound_filter

DEFAULT_BOX_CAP = 5_000_000


class BoxTooLargeError(ValueError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"search box has {size} candidates, above the cap of {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class EnumerationSpec:
    degree: int
    a0: int
    height_cap: int | None = None
    box_cap: int = DEFAULT_BOX_CAP

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if self.a0 < 1:
            raise ValueError("constant term must be >= 1")


@dataclass
class CensusResult:
    total_checked: int = 0
    expansive: int = 0
    polynomials: list[tuple[int, ...]] = field(default_factory=list)


def _leading_values(spec: EnumerationSpec) -> list[int]:
    top = spec.a0 - 1
    if spec.height_cap is not None:
        top = min(top, spec.height_cap)
    return [v for v in range(-top, top + 1) if v != 0]


def _inner_ranges(spec: EnumerationSpec, an: int) -> list[range]:
    n, a0 = spec.degree, spec.a0
    out = []
    for k in range(1, n):
        # strict bound: |a_k| <= bound - 1
        m = comb(n - 1, k - 1) * abs(an) + comb(n - 1, k) * a0 - 1
        if spec.height_cap is not None:
            m = min(m, spec.height_cap)
        out.append(range(-m, m + 1))
    return out


def box_size(spec: EnumerationSpec) -> int:
    return sum(prod(len(r) for r in _inner_ranges(spec, an)) for an in _leading_values(spec))


def _census_for_leading(spec: EnumerationSpec, an: int) -> CensusResult:
    res = CensusResult()
    if spec.height_cap is not None and spec.a0 > spec.height_cap:
        return res
    for inner in itertools.product(*_inner_ranges(spec, an)):
        coeffs = (spec.a0, *inner, an)
        res.total_checked += 1
        if coefficient_bound_filter(coeffs) and check_d_conditions(coeffs).expansive:
            res.polynomials.append(coeffs)
    res.expansive = len(res.polynomials)
    return res


def _census_task(args):
    return _census_for_leading(*args)


def enumerate_expansive(spec: EnumerationSpec, workers: int = 1) -> CensusResult:
    size = box_size(spec)
    if size > spec.box_cap:
        raise BoxTooLargeError(size, spec.box_cap)
    tasks = [(spec, an) for an in _leading_values(spec)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_census_task, tasks))
    else:
        parts = [_census_task(t) for t in tasks]
    total = CensusResult()
    for part in parts:
        total.total_checked += part.total_checked
        total.polynomials.extend(part.polynomials)
    total.polynomials.sort()
    total.expansive = len(total.polynomials)
    return total
