import random

import numpy as np
import pytest

from expansive.oracle import INCONCLUSIVE, find_roots_numeric, numeric_expansive, numeric_gap
from oracles import match_multisets
from sweeps import random_poly


def test_quadratic_roots():
    nr = find_roots_numeric([3, 0, -1])
    assert match_multisets(nr.roots, [-3**0.5, 3**0.5]) < 1e-12
    assert all(nr.is_real(i) for i in range(2))


def test_complex_pair_is_conjugate():
    nr = find_roots_numeric([1, 1, 1])
    a, b = nr.roots
    assert a == b.conjugate()
    assert match_multisets(nr.roots, [np.exp(2j * np.pi / 3), np.exp(-2j * np.pi / 3)]) < 1e-12


def test_zero_roots_factored():
    nr = find_roots_numeric([0, 0, -4, 1])
    assert match_multisets(nr.roots, [0, 0, 4]) < 1e-12


@pytest.mark.parametrize("f, want", [([3, 0, -1], True), ([1, 0, 3], False), ([1, 1, 1], INCONCLUSIVE),
                                     ([2, -1], True), ([-1, 2], False)])
def test_numeric_expansive_examples(f, want):
    assert numeric_expansive(f) == want


def test_numeric_gap():
    assert abs(numeric_gap([3, 0, -1]) - (3**0.5 - 1)) < 1e-12


def test_reconstruction_random():
    rng = random.Random(37)
    for _ in range(300):
        n = rng.randint(1, 10)
        f = random_poly(rng, n, 20)
        nr = find_roots_numeric(f)
        rebuilt = np.polynomial.polynomial.polyfromroots(nr.roots) * f[-1]
        scale = max(abs(c) for c in f)
        err = np.max(np.abs(rebuilt - np.array(f, dtype=float))) / scale
        assert err < 1e-8, (f, err)
        assert nr.max_residual < 1e-10


def test_conjugate_symmetry_random():
    rng = random.Random(41)
    for _ in range(200):
        f = random_poly(rng, rng.randint(2, 8), 9)
        roots = find_roots_numeric(f).roots
        assert sorted(roots, key=lambda z: (z.real, z.imag)) == sorted(
            (z.conjugate() for z in roots), key=lambda z: (z.real, z.imag))


def test_radii_enclose_double_root():
    # (x - 2)^2: a double root is ill-conditioned; its disks must reach 2
    nr = find_roots_numeric([4, -4, 1])
    for z, r in zip(nr.roots, nr.radii):
        assert abs(z - 2) <= r + 1e-12


def test_rejects_constant():
    with pytest.raises(ValueError):
        find_roots_numeric([5])
