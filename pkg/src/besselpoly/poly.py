"""Dense univariate polynomials in x over the rationals.

Coefficients are stored in ascending order and always normalized (no
trailing zeros), so two polynomials are equal exactly when their coefficient
tuples are equal.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .exactmath import ExactMathError, RationalLike, rat_from_str, rat_to_str


class Poly:
    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: RationalLike) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: RationalLike, k: int) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> float | int:
        """Degree, or ``-math.inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c != 0) == 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] - other[k] for k in range(n))

    def __rsub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ExactMathError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: RationalLike) -> Poly:
        c = Fraction(c)
        return Poly(c * a for a in self.coeffs)

    def derivative(self, order: int = 1) -> Poly:
        if order < 0:
            raise ExactMathError(f"derivative order must be >= 0, got {order}")
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [k * cs[k] for k in range(1, len(cs))]
        return Poly(cs)

    def reverse(self, n: int) -> Poly:
        """Return x^n p(1/x); n must be at least the degree."""
        if n < self.degree:
            raise ExactMathError(
                f"cannot reverse degree-{self.degree} polynomial into degree {n}"
            )
        return Poly(self[n - k] for k in range(n + 1))

    def __call__(self, v: RationalLike) -> Fraction:
        v = Fraction(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def terms(self) -> list[tuple[int, Fraction]]:
        """Nonzero (power, coefficient) pairs in descending powers."""
        return [(k, c) for k, c in reversed(list(enumerate(self.coeffs))) if c != 0]

    def to_json(self) -> dict:
        return {"coeffs": [rat_to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> Poly:
        return cls(rat_from_str(s) for s in obj["coeffs"])

    def to_text(self) -> str:
        return _render(self, latex=False)

    def to_latex(self) -> str:
        return _render(self, latex=True)


def _coerce(other):
    if isinstance(other, Poly):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly.const(other)
    return NotImplemented


def _render(p: Poly, latex: bool) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, c in p.terms():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _coeff_str(mag, latex)
        else:
            if k == 1:
                var = "x"
            else:
                var = f"x^{{{k}}}" if latex else f"x^{k}"
            if mag == 1:
                body = var
            elif mag.denominator == 1:
                body = f"{mag.numerator}{var}"
            elif latex:
                body = _coeff_str(mag, latex) + var
            else:
                body = f"({_coeff_str(mag, latex)}){var}"
        if out or sign == "-":
            out.append(sign)
        out.append(body)
    return "".join(out)


def _coeff_str(c: Fraction, latex: bool) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_sub(p: Poly, q: Poly) -> Poly:
    return p - q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_scale(c: RationalLike, p: Poly) -> Poly:
    return p.scale(c)


def poly_derivative(p: Poly, order: int) -> Poly:
    return p.derivative(order)


def poly_reverse(p: Poly, n: int) -> Poly:
    return p.reverse(n)


def poly_eval(p: Poly, v: RationalLike) -> Fraction:
    return p(v)


def first_mismatch(a: Sequence[Fraction] | Poly, b: Sequence[Fraction] | Poly) -> int | None:
    """Lowest index where two coefficient sequences differ, or None."""
    if isinstance(a, Poly):
        a = a.coeffs
    if isinstance(b, Poly):
        b = b.coeffs
    for k in range(max(len(a), len(b))):
        ak = a[k] if k < len(a) else 0
        bk = b[k] if k < len(b) else 0
        if ak != bk:
            return k
    return None
