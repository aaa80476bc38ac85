"""Intersection arrays of distance-regular graphs and their closed-form invariants.

All intermediate arithmetic uses :class:`fractions.Fraction`; integrality is
asserted only on final quantities because partial quotients of the
``b`` and ``c`` products need not be integers even when the result is.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .polynomial import IntPolynomial, derivative, evaluate, second_derivative


class HardInvalid(ValueError):
    """A structural constraint of an intersection array is violated."""

    def __init__(self, reason: str, index: int | None = None):
        super().__init__(reason)
        self.reason = reason
        self.index = index


class NonIntegralSphere(HardInvalid):
    def __init__(self, i: int, value: Fraction):
        super().__init__(f"sphere size k_{i} = {value} is not a positive integer", i)
        self.value = value


class NonIntegralCoefficient(HardInvalid):
    def __init__(self, i: int, value: Fraction):
        super().__init__(f"coefficient of t^{i} = {value} is not an integer (n*k_{i} is odd)", i)
        self.value = value


class RelationViolated(ValueError):
    def __init__(self, lhs: int, rhs: int):
        super().__init__(f"relation (n-k-1)*mu = k*(k-lambda-1) violated: {lhs} != {rhs}")
        self.lhs = lhs
        self.rhs = rhs


class FeasibilityWarning(UserWarning):
    """Non-fatal: the array breaks a standard monotonicity condition."""


def _raw_spheres(b: Sequence[int], c: Sequence[int]) -> list[Fraction]:
    # k_0 = 1, k_i = k_{i-1} * b_{i-1} / c_i; c_1 = 1 so k_1 = b_0.
    ks = [Fraction(1)]
    for i in range(1, len(b) + 1):
        ks.append(ks[-1] * b[i - 1] / c[i - 1])
    return ks


def _check_structure(b: Sequence[int], c: Sequence[int]) -> list[int]:
    if len(b) != len(c):
        raise HardInvalid(f"b and c must have equal length (got {len(b)} and {len(c)})")
    if len(b) < 1:
        raise HardInvalid("diameter must be at least 1")
    for i, x in enumerate(b):
        if isinstance(x, bool) or not isinstance(x, int) or x <= 0:
            raise HardInvalid(f"b_{i} = {x!r} must be a positive integer", i)
    for i, x in enumerate(c, start=1):
        if isinstance(x, bool) or not isinstance(x, int) or x <= 0:
            raise HardInvalid(f"c_{i} = {x!r} must be a positive integer", i)
    if c[0] != 1:
        raise HardInvalid(f"c_1 must equal 1 (got {c[0]})", 1)
    ks = _raw_spheres(b, c)
    for i, k in enumerate(ks):
        if k.denominator != 1 or k <= 0:
            raise NonIntegralSphere(i, k)
    out = [int(k) for k in ks]
    n = sum(out)
    for i, k in enumerate(out[1:], start=1):
        if (n * k) % 2:
            raise NonIntegralCoefficient(i, Fraction(n * k, 2))
    return out


@dataclass(frozen=True)
class IntersectionArray:
    """``{b_0, ..., b_{D-1}; c_1, ..., c_D}``; construction enforces every hard constraint."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        _check_structure(self.b, self.c)

    @property
    def diameter(self) -> int:
        return len(self.b)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class SphereSizes:
    k: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.k)


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int


@dataclass(frozen=True)
class Feasibility:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def monotonicity_warnings(a: IntersectionArray) -> list[str]:
    out = []
    for i in range(1, len(a.b)):
        if a.b[i] > a.b[i - 1]:
            out.append(f"b is not non-increasing: b_{i} = {a.b[i]} > b_{i - 1} = {a.b[i - 1]}")
    for i in range(1, len(a.c)):
        if a.c[i] < a.c[i - 1]:
            out.append(f"c is not non-decreasing: c_{i + 1} = {a.c[i]} < c_{i} = {a.c[i - 1]}")
    return out


def validate(b: Sequence[int], c: Sequence[int]) -> IntersectionArray:
    """Build an :class:`IntersectionArray`, raising :class:`HardInvalid` on structural faults.

    Monotonicity failures are reported through :class:`FeasibilityWarning`.
    """
    a = IntersectionArray(tuple(b), tuple(c))
    for msg in monotonicity_warnings(a):
        warnings.warn(msg, FeasibilityWarning, stacklevel=2)
    return a


def sphere_sizes(a: IntersectionArray) -> SphereSizes:
    ks = []
    for i, k in enumerate(_raw_spheres(a.b, a.c)):
        if k.denominator != 1 or k <= 0:
            raise NonIntegralSphere(i, k)
        ks.append(int(k))
    return SphereSizes(tuple(ks))


def _ratio(a: IntersectionArray, i: int) -> Fraction:
    # prod_{j=1}^{i-1} b_j / prod_{j=2}^{i} c_j
    return Fraction(prod(a.b[1:i]), prod(a.c[1:i]))


def hosoya_closed_form(a: IntersectionArray) -> IntPolynomial:
    n = sphere_sizes(a).n
    scale = Fraction(n * a.b[0], 2)
    coeffs = [Fraction(0), scale]
    for i in range(2, a.diameter + 1):
        coeffs.append(scale * _ratio(a, i))
    for i, x in enumerate(coeffs[1:], start=1):
        if x.denominator != 1 or x <= 0:
            raise NonIntegralCoefficient(i, x)
    return IntPolynomial(int(x) for x in coeffs)


def wiener_closed_form(a: IntersectionArray) -> int:
    hosoya_closed_form(a)  # integrality checks
    n = sphere_sizes(a).n
    total = 1 + sum(i * _ratio(a, i) for i in range(2, a.diameter + 1))
    w = Fraction(n * a.b[0], 2) * total
    if w.denominator != 1:
        raise NonIntegralCoefficient(0, w)
    return int(w)


def hyper_wiener_closed_form(a: IntersectionArray) -> int:
    # WW = 1/2 sum (d + d^2) = H'(1) + H''(1)/2 since H''(1) = sum d(d-1).
    h = hosoya_closed_form(a)
    ww = evaluate(derivative(h), 1) + Fraction(evaluate(second_derivative(h), 1), 2)
    if ww.denominator != 1:
        raise NonIntegralCoefficient(0, ww)
    return int(ww)


def srg_feasibility(p: SrgParams) -> Feasibility:
    n, k, lam, mu = p.n, p.k, p.lam, p.mu
    if lam < 0:
        return Feasibility(False, f"lambda = {lam} must be >= 0")
    if mu < 1:
        return Feasibility(False, f"mu = {mu} must be >= 1")
    if not 0 < k:
        return Feasibility(False, f"k = {k} must be positive")
    if k >= n - 1:
        return Feasibility(False, f"k = n-1 or larger (k = {k}, n = {n}): no non-adjacent pairs")
    lhs, rhs = (n - k - 1) * mu, k * (k - lam - 1)
    if lhs != rhs:
        return Feasibility(False, f"relation (n-k-1)*mu = k*(k-lambda-1) violated: {lhs} != {rhs}")
    return Feasibility(True)


def srg_to_array(p: SrgParams) -> IntersectionArray:
    b1 = p.k - p.lam - 1
    if b1 <= 0:
        raise HardInvalid(f"k - lambda - 1 = {b1} must be positive for diameter 2", 1)
    return IntersectionArray((p.k, b1), (1, p.mu))


def srg_hosoya(p: SrgParams) -> IntPolynomial:
    scale = Fraction(p.n * p.k, 2)
    c1 = scale
    c2 = scale * Fraction(p.k - p.lam - 1, p.mu)
    for i, x in ((1, c1), (2, c2)):
        if x.denominator != 1:
            raise NonIntegralCoefficient(i, x)
    return IntPolynomial([0, int(c1), int(c2)])


def srg_hosoya_simplified(p: SrgParams) -> IntPolynomial:
    lhs, rhs = (p.n - p.k - 1) * p.mu, p.k * (p.k - p.lam - 1)
    if lhs != rhs:
        raise RelationViolated(lhs, rhs)
    c1 = Fraction(p.n * p.k, 2)
    c2 = Fraction(p.n * (p.n - p.k - 1), 2)
    for i, x in ((1, c1), (2, c2)):
        if x.denominator != 1:
            raise NonIntegralCoefficient(i, x)
    return IntPolynomial([0, int(c1), int(c2)])
