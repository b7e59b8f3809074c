"""Fraction-free (Bareiss) determinants over Python integers."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Sequence


class InexactDivisionError(ArithmeticError):
    """A Bareiss division left a remainder; this is always an implementation bug."""


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        rs = tuple(tuple(int(x) for x in r) for r in rows)
        if not rs:
            raise ValueError("matrix must have dimension >= 1")
        if any(len(r) != len(rs) for r in rs):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rs)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


@dataclass
class EliminationTrace:
    max_entry_bits: list[int] = field(default_factory=list)
    pivot_swaps: int = 0


def _as_matrix(m) -> ExactMatrix:
    return m if isinstance(m, ExactMatrix) else ExactMatrix(m)


def bareiss_determinant(m) -> tuple[int, EliminationTrace]:
    """Exact determinant by Bareiss elimination.

    Pivoting takes the first nonzero entry in the column scanning rows top-down.
    ``trace.max_entry_bits[s]`` is the largest bit-length among the entries
    produced by elimination step ``s``; every such entry is a minor of the
    row-permuted input.
    """
    m = _as_matrix(m)
    k = m.dim
    a = [list(r) for r in m.rows]
    trace = EliminationTrace()
    # a zero row forces det 0; also keeps trace entries bounded by the Hadamard bound
    if any(not any(r) for r in a):
        return 0, trace
    sign = 1
    prev = 1
    for s in range(k - 1):
        if a[s][s] == 0:
            for r in range(s + 1, k):
                if a[r][s] != 0:
                    a[s], a[r] = a[r], a[s]
                    sign = -sign
                    trace.pivot_swaps += 1
                    break
            else:
                return 0, trace
        piv = a[s][s]
        top = 0
        for i in range(s + 1, k):
            ai = a[i]
            ais = ai[s]
            row_s = a[s]
            for j in range(s + 1, k):
                num = piv * ai[j] - ais * row_s[j]
                q, r = divmod(num, prev)
                if r:
                    raise InexactDivisionError(
                        f"Bareiss division left remainder at step {s}, entry ({i},{j})"
                    )
                ai[j] = q
                b = abs(q).bit_length()
                if b > top:
                    top = b
            ai[s] = 0
        trace.max_entry_bits.append(top)
        prev = piv
    return sign * a[k - 1][k - 1], trace


def determinant_sign(m) -> int:
    """Return -1, 0 or 1."""
    d, _ = bareiss_determinant(m)
    return (d > 0) - (d < 0)


def hadamard_bound(m) -> int:
    """Ceiling of the product of the row Euclidean norms."""
    m = _as_matrix(m)
    prod = 1
    for r in m.rows:
        prod *= sum(x * x for x in r)
    root = isqrt(prod)
    return root if root * root == prod else root + 1

