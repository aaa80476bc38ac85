"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Union

Number = Union[int, Fraction]

_TERM = re.compile(r"^(-?\d+)(?:\*t(?:\^(\d+))?)?$")


class IntPolynomial:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``t**i``.

    The coefficient tuple is always kept in normal form: no trailing zeros,
    so the zero polynomial is the empty tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError(f"coefficient {c!r} is not an integer")
            cs.append(int(c))
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self._coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return render(self)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return IntPolynomial(a + b for a, b in zip_longest(self._coeffs, other._coeffs, fillvalue=0))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __call__(self, x: Number) -> Number:
        return evaluate(self, x)


def from_coeffs(coeffs: Iterable[int]) -> IntPolynomial:
    return IntPolynomial(coeffs)


def evaluate(p: IntPolynomial, x: Number) -> Number:
    """Evaluate exactly with Horner's rule; rational ``x`` gives a rational result."""
    if isinstance(x, float):
        x = Fraction(x)
    acc: Number = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    if isinstance(acc, Fraction) and acc.denominator == 1:
        return acc.numerator
    return acc


def derivative(p: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(i * c for i, c in enumerate(p.coeffs) if i > 0)


def second_derivative(p: IntPolynomial) -> IntPolynomial:
    return derivative(derivative(p))


def render(p: IntPolynomial) -> str:
    """Ascending-power text such as ``"12*t + 12*t^2 + 4*t^3"``; zero is ``"0"``."""
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*t")
        else:
            terms.append(f"{c}*t^{i}")
    return " + ".join(terms) if terms else "0"


def parse(text: str) -> IntPolynomial:
    """Inverse of :func:`render`; accepts only the canonical term syntax."""
    text = text.strip()
    if text == "0":
        return IntPolynomial()
    coeffs: dict[int, int] = {}
    for raw in text.split(" + "):
        m = _TERM.match(raw.strip())
        if m is None:
            raise ValueError(f"cannot parse term {raw!r}")
        c = int(m.group(1))
        if "*t" not in raw:
            power = 0
        else:
            power = int(m.group(2)) if m.group(2) is not None else 1
        if power in coeffs:
            raise ValueError(f"repeated power t^{power}")
        coeffs[power] = c
    out = [0] * (max(coeffs) + 1)
    for power, c in coeffs.items():
        out[power] = c
    return IntPolynomial(out)
