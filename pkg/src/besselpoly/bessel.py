"""Bessel polynomials y_n and Carlitz reverse Bessel polynomials p_n.

p_n is built three independent ways (explicit sum, reversal of y_{n-1},
terminating 1F1 series) so the constructions can be checked against each
other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .exactmath import ExactMathError, double_factorial, factorial
from .poly import Poly


def y_poly(n: int) -> Poly:
    """y_n(x) = sum_k (n+k)! / ((n-k)! k!) (x/2)^k."""
    if n < 0:
        raise ExactMathError(f"y_n needs n >= 0, got {n}")
    return Poly(
        Fraction(factorial(n + k), factorial(n - k) * factorial(k) * 2**k)
        for k in range(n + 1)
    )


def p_poly(n: int) -> Poly:
    """p_n(x) = sum_{k=1}^n (2n-k-1)! / (2^(n-k) (k-1)! (n-k)!) x^k, with p_0 = 1."""
    if n < 0:
        raise ExactMathError(f"p_n needs n >= 0, got {n}")
    if n == 0:
        return Poly.const(1)
    coeffs = [Fraction(0)]
    for k in range(1, n + 1):
        coeffs.append(
            Fraction(
                factorial(2 * n - k - 1),
                2 ** (n - k) * factorial(k - 1) * factorial(n - k),
            )
        )
    return Poly(coeffs)


def p_via_reversal(n: int) -> Poly:
    if n < 1:
        raise ExactMathError("reversal route needs n >= 1 (y_{-1} is undefined)")
    return y_poly(n - 1).reverse(n)


def hyp1f1_terminating(a: int, b: int, scale: Fraction = Fraction(1)) -> Poly:
    """1F1(a; b; scale*x) as a polynomial, for a nonpositive integer a.

    Terms are built by the ratio (a+k)/(b+k) * scale/(k+1); the sum stops as
    soon as the numerator parameter hits zero, before b+k can vanish.
    """
    if a > 0:
        raise ExactMathError("only terminating series (a <= 0) are supported")
    coeffs = [Fraction(1)]
    term = Fraction(1)
    k = 0
    while a + k != 0:
        if b + k == 0:
            raise ExactMathError(f"1F1({a}; {b}; z) hits a zero denominator at k = {k}")
        term = term * (a + k) / (b + k) * scale / (k + 1)
        coeffs.append(term)
        k += 1
    return Poly(coeffs)


def p_via_1f1(n: int) -> Poly:
    """(2n-3)!! x 1F1(1-n; 2-2n; 2x)."""
    if n < 1:
        raise ExactMathError("1F1 route needs n >= 1")
    series = hyp1f1_terminating(1 - n, 2 - 2 * n, Fraction(2))
    return (Poly.x() * series).scale(double_factorial(2 * n - 3))


def ode_residual_y(n: int) -> Poly:
    """x^2 y'' + 2(x+1) y' - n(n+1) y evaluated at y = y_n; zero if y_n solves it."""
    y = y_poly(n)
    x = Poly.x()
    return x * x * y.derivative(2) + Poly((2, 2)) * y.derivative(1) - y.scale(n * (n + 1))


class Kind(Enum):
    Y = "y"
    P = "p"


@dataclass(frozen=True)
class BesselFamily:
    """y_0..y_max_n or p_0..p_max_n, computed once."""

    kind: Kind
    max_n: int
    polys: tuple[Poly, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.max_n < 0:
            raise ExactMathError(f"max_n must be >= 0, got {self.max_n}")
        build = y_poly if self.kind is Kind.Y else p_poly
        object.__setattr__(self, "polys", tuple(build(n) for n in range(self.max_n + 1)))

    def __getitem__(self, n: int) -> Poly:
        if not 0 <= n <= self.max_n:
            raise IndexError(f"{self.kind.value}_{n} outside 0..{self.max_n}")
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)
