"""Exact rational scalars and the integer combinatorics used throughout."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int]


class ExactMathError(ValueError):
    """Domain error in an exact-arithmetic primitive."""


class RationalZeroDivision(ExactMathError, ZeroDivisionError):
    pass


def rat(value: RationalLike | str) -> Fraction:
    return Fraction(value)


def rat_add(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_sub(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) - Fraction(b)


def rat_mul(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_div(a: RationalLike, b: RationalLike) -> Fraction:
    if b == 0:
        raise RationalZeroDivision(f"division of {a} by zero")
    return Fraction(a) / Fraction(b)


def rat_to_str(a: RationalLike) -> str:
    """Canonical string form: ``"p/q"``, or ``"p"`` when q = 1."""
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def double_factorial(n: int) -> int:
    """n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ExactMathError(f"double factorial undefined for n = {n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """x (x - 1) ... (x - n + 1); equals 1 for n = 0."""
    if n < 0:
        raise ExactMathError(f"falling factorial needs n >= 0, got {n}")
    x = Fraction(x)
    result = Fraction(1)
    for m in range(n):
        result *= x - m
    return result


def binomial(k: int, l: int) -> int:
    if k < 0 or l < 0:
        raise ExactMathError(f"binomial({k}, {l}) needs nonnegative arguments")
    return math.comb(k, l)


factorial = math.factorial
