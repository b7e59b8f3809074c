"""Coefficient-growth benchmark: Schur-Cohn chain vs. Bareiss D-determinants.

Bit-lengths are the primary, machine-independent metric; wall times are
reported alongside but are left out of the CSV so that a fixed seed gives a
byte-identical file.
"""
from __future__ import annotations

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass, field

from .expansivity import DMatrixSpec, build_d_matrix, schur_chain, SIGNS
from .linalg import bareiss_determinant, hadamard_bound
from .poly import IntPolynomial

CSV_VERSION = 1
CSV_COLUMNS = ("csv_version", "engine", "index", "label", "median_max_bits", "max_max_bits", "hadamard_bits")


@dataclass(frozen=True)
class BenchConfig:
    degree: int = 12
    height: int = 2**32
    trials: int = 5
    seed: int = 0


@dataclass
class MatrixGrowth:
    k: int
    sign: str
    max_bits: list[int]  # per trial: largest Bareiss intermediate entry
    hadamard_bits: list[int]  # per trial: bit-length of the Hadamard bound


@dataclass
class GrowthProfile:
    config: BenchConfig
    schur_bits: list[list[int]]  # [trial][step] max coefficient bit-length
    matrices: list[MatrixGrowth] = field(default_factory=list)
    schur_seconds: float = 0.0
    bareiss_seconds: float = 0.0

    @property
    def schur_median(self) -> list[float]:
        return [statistics.median(col) for col in zip(*self.schur_bits)]

    def bareiss_excess(self) -> int:
        """Largest ``entry_bits - hadamard_bits`` over all trials and matrices."""
        return max(
            (b - h for m in self.matrices for b, h in zip(m.max_bits, m.hadamard_bits)),
            default=0,
        )

    def to_dict(self) -> dict:
        return {
            "degree": self.config.degree,
            "height": self.config.height,
            "trials": self.config.trials,
            "seed": self.config.seed,
            "schur_median_bits": self.schur_median,
            "bareiss": [
                {"k": m.k, "sign": m.sign, "max_bits": m.max_bits, "hadamard_bits": m.hadamard_bits}
                for m in self.matrices
            ],
            "max_bareiss_excess_bits": self.bareiss_excess(),
            "schur_seconds": self.schur_seconds,
            "bareiss_seconds": self.bareiss_seconds,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for step, col in enumerate(zip(*self.schur_bits)):
            w.writerow((CSV_VERSION, "schur-cohn", step, f"step{step}", statistics.median(col), max(col), ""))
        for i, m in enumerate(self.matrices):
            w.writerow(
                (CSV_VERSION, "bareiss", i, f"D_{m.k}^{m.sign}",
                 statistics.median(m.max_bits), max(m.max_bits), max(m.hadamard_bits))
            )
        return buf.getvalue()


def random_polynomial(rng: random.Random, degree: int, height: int) -> IntPolynomial:
    cs = [rng.randint(-height, height) for _ in range(degree + 1)]
    for i in (0, degree):
        while cs[i] == 0:
            cs[i] = rng.randint(-height, height)
    return IntPolynomial(cs)


def _max_bits(f: IntPolynomial) -> int:
    return max(abs(c).bit_length() for c in f.coeffs)


def bench_growth(config: BenchConfig) -> GrowthProfile:
    n = config.degree
    if n < 2:
        raise ValueError("benchmark needs degree >= 2")
    rng = random.Random(config.seed)
    polys = [random_polynomial(rng, n, config.height) for _ in range(config.trials)]
    profile = GrowthProfile(config=config, schur_bits=[])
    t0 = time.perf_counter()
    for f in polys:
        profile.schur_bits.append([_max_bits(g) for g in schur_chain(f)])
    profile.schur_seconds = time.perf_counter() - t0

    growth = {(k, s): MatrixGrowth(k, s, [], []) for k in range(1, n + 1) for s in SIGNS}
    t0 = time.perf_counter()
    for f in polys:
        # sign normalization does not change entry sizes
        for (k, s), mg in growth.items():
            m = build_d_matrix(f, DMatrixSpec(k, s))
            _, trace = bareiss_determinant(m)
            entry_bits = max(trace.max_entry_bits, default=0)
            entry_bits = max(entry_bits, max(abs(x).bit_length() for r in m.rows for x in r))
            mg.max_bits.append(entry_bits)
            mg.hadamard_bits.append(hadamard_bound(m).bit_length())
    profile.bareiss_seconds = time.perf_counter() - t0
    profile.matrices = list(growth.values())
    return profile
