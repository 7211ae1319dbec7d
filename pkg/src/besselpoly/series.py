"""Truncated power series in t with polynomial-in-x coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exactmath import ExactMathError, RationalLike, factorial, falling_factorial
from .poly import Poly


class Series:
    """Terms t^0 .. t^order of a formal power series.

    Every coefficient is a :class:`Poly` in x. Binary operations truncate to
    the smaller of the two orders.
    """

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[Poly, ...]

    def __init__(self, coeffs: Iterable[Poly | RationalLike], order: int | None = None):
        cs = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ExactMathError(f"series order must be >= 0, got {order}")
        cs = cs[: order + 1]
        cs.extend(Poly() for _ in range(order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([Poly.const(1)], order)

    def __getitem__(self, k: int) -> Poly:
        if k > self.order:
            raise IndexError(f"t^{k} lies beyond truncation order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(c.to_text() for c in self.coeffs)
        return f"Series(order={self.order}, [{body}])"

    def truncate(self, order: int) -> Series:
        return Series(self.coeffs, min(order, self.order))

    def __add__(self, other: Series) -> Series:
        order = min(self.order, other.order)
        return Series((self.coeffs[k] + other.coeffs[k] for k in range(order + 1)), order)

    def __sub__(self, other: Series) -> Series:
        order = min(self.order, other.order)
        return Series((self.coeffs[k] - other.coeffs[k] for k in range(order + 1)), order)

    def __neg__(self) -> Series:
        return Series((-c for c in self.coeffs), self.order)

    def __mul__(self, other) -> Series:
        if isinstance(other, (Poly, int, Fraction)):
            return Series((c * other for c in self.coeffs), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        out = []
        for k in range(order + 1):
            acc = Poly()
            for l in range(k + 1):
                a, b = self.coeffs[l], other.coeffs[k - l]
                if a.coeffs and b.coeffs:
                    acc = acc + a * b
            out.append(acc)
        return Series(out, order)

    def __rmul__(self, other) -> Series:
        if isinstance(other, (Poly, int, Fraction)):
            return self * other
        return NotImplemented

    def derivative_t(self, n: int = 1) -> Series:
        if n < 0 or n > self.order:
            raise ExactMathError(
                f"cannot take {n} t-derivatives of an order-{self.order} series"
            )
        # d^n/dt^n t^(k+n) = (k+n)!/k! t^k
        out = []
        for k in range(self.order - n + 1):
            out.append(self.coeffs[k + n] * (factorial(k + n) // factorial(k)))
        return Series(out, self.order - n)

    def scaled_coeffs(self) -> list[Poly]:
        """k! [t^k] for every stored k (exponential-generating-function view)."""
        return [c * factorial(k) for k, c in enumerate(self.coeffs)]

    def to_json(self) -> dict:
        return {"order": self.order, "terms": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> Series:
        return cls((Poly.from_json(t) for t in obj["terms"]), obj["order"])


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_derivative_t(a: Series, n: int) -> Series:
    return a.derivative_t(n)


def binom_series(e: RationalLike, K: int) -> Series:
    """(1 - 2t)^e through t^K: [t^l] = (e)_l (-2)^l / l!."""
    e = Fraction(e)
    return Series(
        (falling_factorial(e, l) * (-2) ** l / factorial(l) for l in range(K + 1)), K
    )


def sqrt_one_minus_2t(K: int) -> Series:
    return binom_series(Fraction(1, 2), K)


def series_exp_x_scaled(u: Series, K: int) -> Series:
    """exp(x u(t)) through t^K, for u with constant coefficients and u(0) = 0."""
    if not u.coeffs[0].is_zero():
        raise ExactMathError("exp(x u) needs u to have zero constant term")
    scalars = []
    for k, c in enumerate(u.coeffs):
        if c.degree > 0:
            raise ExactMathError(f"coefficient of t^{k} in u is not a constant")
        scalars.append(c[0])
    order = min(K, u.order)

    # power[k] holds [t^k] u^m / m! for the current m; u^m starts at t^m
    out = [[Fraction(0)] * (k + 1) for k in range(order + 1)]
    power = [Fraction(0)] * (order + 1)
    power[0] = Fraction(1)
    for m in range(order + 1):
        for k in range(m, order + 1):
            out[k][m] = power[k]
        nxt = [Fraction(0)] * (order + 1)
        for i in range(m, order + 1):
            if power[i] == 0:
                continue
            for j in range(1, order + 1 - i):
                nxt[i + j] += power[i] * scalars[j]
        power = [c / (m + 1) for c in nxt]
    return Series((Poly(row) for row in out), order)


def generating_function(K: int) -> Series:
    """exp(x (1 - sqrt(1 - 2t))) through t^K; k! [t^k] is p_k(x)."""
    u = Series.one(K) - sqrt_one_minus_2t(K)
    return series_exp_x_scaled(u, K)
