"""Exhaustive and random polynomial generators shared by the tests."""
import itertools
from dataclasses import dataclass

from expansive import check_d_conditions, check_schur_cohn
from expansive.oracle import numeric_expansive


def all_polys(max_degree, lo, hi, positive_a0=True, min_degree=1):
    for n in range(min_degree, max_degree + 1):
        for cs in itertools.product(range(lo, hi + 1), repeat=n + 1):
            if cs[-1] == 0 or (positive_a0 and cs[0] <= 0):
                continue
            yield cs


@dataclass(frozen=True)
class SweepRow:
    coeffs: tuple
    full: bool
    reduced: bool
    schur: bool
    numeric: object


def run_sweep(max_degree, lo, hi, positive_a0=True, margin=1e-9, oracle=True):
    rows = []
    for cs in all_polys(max_degree, lo, hi, positive_a0):
        rows.append(SweepRow(
            cs,
            check_d_conditions(cs, "full").expansive,
            check_d_conditions(cs, "reduced").expansive,
            check_schur_cohn(cs).expansive,
            numeric_expansive(cs, margin) if oracle else None,
        ))
    return rows


def random_poly(rng, n, height, a0_nonzero=True):
    cs = [rng.randint(-height, height) for _ in range(n + 1)]
    while cs[-1] == 0:
        cs[-1] = rng.randint(-height, height)
    while a0_nonzero and cs[0] == 0:
        cs[0] = rng.randint(-height, height)
    return tuple(cs)
