"""Exact integer polynomials: representation, evaluation, measures and transforms.

Coefficients are stored ascending (``coeffs[i]`` is the coefficient of x**i).
The stored length fixes the *pseudo-degree* ``n = len(coeffs) - 1``; a zero
top coefficient is allowed and is never trimmed implicitly, because the Schur
chain relies on the pseudo-degree dropping by exactly one per step.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class PolynomialError(ValueError):
    """Bad polynomial input (zero polynomial, unparsable text, ...)."""


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise PolynomialError("empty coefficient sequence")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def parse(cls, text: str, order: str = "asc") -> "IntPolynomial":
        """Parse comma/space separated integers, e.g. ``"3,0,-1"`` for 3 - x**2."""
        tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
        if not tokens:
            raise PolynomialError("no coefficients given")
        try:
            cs = [int(t) for t in tokens]
        except ValueError as exc:
            raise PolynomialError(f"malformed coefficient list {text!r}") from exc
        if order == "desc":
            cs.reverse()
        elif order != "asc":
            raise PolynomialError(f"unknown coefficient order {order!r}")
        return cls(cs)

    @property
    def n(self) -> int:
        """Pseudo-degree (stored length minus one)."""
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """True degree; -1 for the zero polynomial."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def trim(self) -> "IntPolynomial":
        """Drop zero top coefficients (canonical view)."""
        d = self.degree
        return IntPolynomial(self.coeffs[: max(d, 0) + 1])

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def as_poly(f) -> IntPolynomial:
    if isinstance(f, IntPolynomial):
        return f
    if isinstance(f, str):
        return IntPolynomial.parse(f)
    return IntPolynomial(f)


def _require_nonzero(f: IntPolynomial) -> None:
    if f.is_zero():
        raise PolynomialError("zero polynomial")


def as_rational(x) -> Fraction:
    """Convert ``x`` (int, Fraction, or text like ``"3/2"``) to a Fraction."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(x)


@dataclass(frozen=True)
class Measures:
    height: int
    length: int
    mahler_if_expansive: int


@dataclass(frozen=True)
class SignNormalized:
    poly: IntPolynomial
    negated: bool
    zero_constant: bool


def normalize_sign(f) -> SignNormalized:
    """Make the constant term positive.

    A zero constant term is flagged rather than rejected: x divides f, so f is
    not expansive.
    """
    f = as_poly(f)
    _require_nonzero(f)
    if f[0] < 0:
        return SignNormalized(-f, True, False)
    return SignNormalized(f, False, f[0] == 0)


def evaluate(f, x) -> Fraction:
    f = as_poly(f)
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def evaluate_int(f: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def measures(f) -> Measures:
    f = as_poly(f)
    _require_nonzero(f)
    abs_cs = [abs(c) for c in f.coeffs]
    return Measures(height=max(abs_cs), length=sum(abs_cs), mahler_if_expansive=abs_cs[0])


def reverse(f) -> IntPolynomial:
    f = as_poly(f)
    return IntPolynomial(reversed(f.coeffs))


def schur_transform(f) -> IntPolynomial:
    """Real Schur transform ``b_k = a_0 a_k - a_n a_{n-k}`` for k < n.

    The result has pseudo-degree n - 1 (b_n = 0 is dropped).
    """
    f = as_poly(f)
    n = f.n
    if n < 1:
        raise PolynomialError("Schur transform needs pseudo-degree >= 1")
    a = f.coeffs
    return IntPolynomial(a[0] * a[k] - a[n] * a[n - k] for k in range(n))


def scale_argument(f, s) -> IntPolynomial:
    """Return ``q**n * f(s x)`` for ``s = p/q``; its roots are the roots of f divided by s."""
    f = as_poly(f)
    s = as_rational(s)
    if s == 0:
        raise PolynomialError("scale factor must be nonzero")
    p, q = s.numerator, s.denominator
    n = f.n
    return IntPolynomial(c * p**j * q ** (n - j) for j, c in enumerate(f.coeffs))


def substitute_power(f: IntPolynomial, y: int) -> IntPolynomial:
    """Coefficients of ``f(y x)`` (integer y), keeping the stored length."""
    return IntPolynomial(c * y**j for j, c in enumerate(f.coeffs))


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def strip_zeros(cs: Sequence[int]) -> list[int]:
    """Trim trailing zeros, keeping at least one entry."""
    out = list(cs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
