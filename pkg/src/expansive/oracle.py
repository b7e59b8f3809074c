"""Floating-point root finder used only as an independent cross-check.

Nothing in the exact engines depends on this module. Roots come from Aberth
iteration in double precision; each root also carries an inclusion radius
(Weierstrass correction times n, plus a rounding term) so near-circle and
clustered roots yield an honest "inconclusive" instead of a wrong verdict.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import as_poly

CONVERGENCE = 1e-12
MAX_SWEEPS = 10_000
_ANGLE_OFFSET = 0.4142135623730951  # sqrt(2) - 1, breaks symmetric starts
_EPS = np.finfo(float).eps

INCONCLUSIVE = "inconclusive"


class OracleError(RuntimeError):
    """Root iteration failed to converge."""


@dataclass(frozen=True)
class NumericRoots:
    roots: tuple[complex, ...]
    radii: tuple[float, ...]
    max_residual: float

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(np.array(self.roots, dtype=complex))

    def is_real(self, i: int) -> bool:
        return self.roots[i].imag == 0.0


def _relative_residual(c: np.ndarray, z: np.ndarray, length: float) -> np.ndarray:
    n = len(c) - 1
    vals = np.polynomial.polynomial.polyval(z, c)
    return np.abs(vals) / (length * np.maximum(1.0, np.abs(z)) ** n)


def _aberth(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    dc = np.polynomial.polynomial.polyder(c)
    height = np.max(np.abs(c))
    radius = 1.0 + height / abs(c[-1])
    angles = 2 * np.pi * (np.arange(n) + _ANGLE_OFFSET) / n
    z = radius * np.exp(1j * angles)
    length = float(np.sum(np.abs(c)))
    eye = np.eye(n, dtype=bool)
    polish = 2
    for _ in range(MAX_SWEEPS):
        if np.max(_relative_residual(c, z, length)) <= CONVERGENCE:
            if polish == 0:
                return z
            polish -= 1
        p = np.polynomial.polynomial.polyval(z, c)
        dp = np.polynomial.polynomial.polyval(z, dc)
        diff = z[:, None] - z[None, :]
        diff[eye] = 1.0
        inv = 1.0 / diff
        inv[eye] = 0.0
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            step = ratio / (1.0 - ratio * s)
        step = np.where(np.isfinite(step), step, 0.0)
        # a converged root can sit exactly on zero derivative; nudge it
        stuck = (dp == 0) & (p != 0)
        step[stuck] = -1e-8 * (1 + abs(z[stuck]))
        z = z - step
    raise OracleError(f"Aberth iteration did not converge in {MAX_SWEEPS} sweeps")


def _inclusion_radii(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    if n == 1:
        return np.zeros(1)
    vals = np.abs(np.polynomial.polynomial.polyval(z, c))
    # running bound on the Horner rounding error
    absz = np.abs(z)
    rounding = 4 * n * _EPS * np.polynomial.polynomial.polyval(absz, np.abs(c))
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    denom = abs(c[-1]) * np.abs(np.prod(diff, axis=1))
    with np.errstate(divide="ignore"):
        w = (vals + rounding) / denom
    return np.where(np.isfinite(w), n * w, np.inf)


def _conjugate_close(z: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Make the root set closed under conjugation; near-real roots become real."""
    z = z.copy()
    n = len(z)
    realish = np.abs(z.imag) <= np.maximum(r, 1e-14 * np.maximum(1.0, np.abs(z)))
    z[realish] = z[realish].real
    upper = [i for i in range(n) if not realish[i] and z[i].imag > 0]
    lower = [i for i in range(n) if not realish[i] and z[i].imag < 0]
    used = set()
    for i in upper:
        best = min((j for j in lower if j not in used), key=lambda j: abs(z[j] - z[i].conjugate()), default=None)
        if best is None:
            continue
        used.add(best)
        mid = (z[i] + z[best].conjugate()) / 2
        z[i], z[best] = mid, mid.conjugate()
    return z


def find_roots_numeric(f) -> NumericRoots:
    f = as_poly(f).trim()
    n = f.n
    if n < 1:
        raise ValueError("need degree >= 1")
    zeros = 0
    while f[zeros] == 0:
        zeros += 1
    c = np.array([float(x) for x in f.coeffs[zeros:]])
    if len(c) > 1:
        z = _aberth(c)
        r = _inclusion_radii(c, z)
        z = _conjugate_close(z, r)
        # recompute radii on the symmetrized roots
        r = np.maximum(r, _inclusion_radii(c, z))
    else:
        z, r = np.zeros(0, dtype=complex), np.zeros(0)
    z = np.concatenate([np.zeros(zeros, dtype=complex), z])
    r = np.concatenate([np.zeros(zeros), r])
    full = np.array([float(x) for x in f.coeffs])
    residual = float(np.max(_relative_residual(full, z, float(np.sum(np.abs(full))))))
    order = np.lexsort((z.imag, z.real))
    return NumericRoots(
        roots=tuple(complex(v) for v in z[order]),
        radii=tuple(float(v) for v in r[order]),
        max_residual=residual,
    )


def _components(z: np.ndarray, r: np.ndarray) -> list[list[int]]:
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= r[i] + r[j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def numeric_expansive(f, margin: float = 1e-9):
    """True / False / ``"inconclusive"`` from the numeric roots and their inclusion disks."""
    f = as_poly(f).trim()
    if f.n < 1:
        return True
    nr = find_roots_numeric(f)
    z = np.array(nr.roots, dtype=complex)
    r = np.array(nr.radii)
    if np.all(np.abs(z) - r > 1 + margin):
        return True
    for comp in _components(z, r):
        if all(abs(z[i]) + r[i] < 1 - margin for i in comp):
            return False
    return INCONCLUSIVE


def numeric_gap(f) -> float:
    nr = find_roots_numeric(f)
    return float(np.min(nr.moduli)) - 1.0
