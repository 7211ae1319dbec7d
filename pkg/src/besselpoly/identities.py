"""Exact verification of the derivative identity and the p_n recurrence.

Each check runs over its whole parameter grid (fail-slow) and returns a
:class:`VerifyReport` listing every failing cell with a witness: the first
mismatching coefficient index and both polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .bessel import BesselFamily, Kind, ode_residual_y
from .coeffs import CoeffTable, coeff_closed_form, coeffs_recurrence
from .exactmath import binomial, falling_factorial
from .poly import Poly, first_mismatch
from .series import binom_series, generating_function


class Identity(str, Enum):
    THEOREM1 = "Theorem1"
    THEOREM2 = "Theorem2"
    GENFUNC = "GenFunc"
    ODE = "ODE"
    CLOSED_FORM = "ClosedForm"
    ROW_SUM = "RowSum"


@dataclass(frozen=True)
class Failure:
    params: dict
    index: int
    expected: Poly
    actual: Poly

    def to_json(self) -> dict:
        return {
            "params": dict(self.params),
            "index": self.index,
            "expected": self.expected.to_json(),
            "actual": self.actual.to_json(),
        }


@dataclass
class VerifyReport:
    identity: Identity
    grid: list[dict] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "identity": self.identity.value,
            "grid": [dict(p) for p in self.grid],
            "passed": self.passed,
            "failures": [f.to_json() for f in self.failures],
        }


Check = Callable[..., Optional[Failure]]


def _run(identity: Identity, grid: Iterable[dict], check: Check) -> VerifyReport:
    report = VerifyReport(identity)
    for params in grid:
        report.grid.append(params)
        failure = check(**params)
        if failure is not None:
            report.failures.append(failure)
    return report


def _compare(params: dict, expected: Poly, actual: Poly) -> Optional[Failure]:
    k = first_mismatch(expected, actual)
    if k is None:
        return None
    return Failure(params, k, expected, actual)


def _table_for(n_max: int, table: CoeffTable | None) -> CoeffTable:
    if table is None:
        return coeffs_recurrence(n_max)
    if table.n_max < n_max:
        raise ValueError(f"table has {table.n_max} rows, need {n_max}")
    return table


class _PFamily:
    """p_n cache that grows on demand."""

    def __init__(self):
        self._family = BesselFamily(Kind.P, 0)

    def __getitem__(self, n: int) -> Poly:
        if n > self._family.max_n:
            self._family = BesselFamily(Kind.P, max(n, 2 * self._family.max_n))
        return self._family[n]


# -- Theorem 1 ---------------------------------------------------------------


def theorem1_sides(N: int, K: int, table: CoeffTable | None = None):
    """Both sides of the derivative identity as series through t^K.

    Left: the N-th t-derivative of the generating function.
    Right: sum_{i=N}^{2N-1} a_{i-N}(N, x) (1-2t)^(-i/2) F.
    """
    table = _table_for(N, table)
    lhs = generating_function(K + N).derivative_t(N)
    F = generating_function(K)
    acc = None
    for i in range(N, 2 * N):
        term = binom_series(Fraction(-i, 2), K) * table.cell(N, i - N)
        acc = term if acc is None else acc + term
    return lhs, acc * F


def _check_theorem1(N: int, K: int, table: CoeffTable | None = None) -> Optional[Failure]:
    lhs, rhs = theorem1_sides(N, K, table)
    for k in range(K + 1):
        if lhs[k] != rhs[k]:
            return Failure({"N": N, "K": K}, k, lhs[k], rhs[k])
    return None


def verify_theorem1(
    N: int, K: int, table: CoeffTable | None = None
) -> VerifyReport:
    return verify_theorem1_grid(range(N, N + 1), K, table)


def verify_theorem1_grid(
    Ns: Iterable[int], K: int, table: CoeffTable | None = None
) -> VerifyReport:
    return _run(
        Identity.THEOREM1,
        ({"N": N, "K": K} for N in Ns),
        lambda N, K: _check_theorem1(N, K, table),
    )


# -- Theorem 2 ---------------------------------------------------------------


def theorem2_rhs(N: int, k: int, table: CoeffTable, p: _PFamily | BesselFamily) -> Poly:
    """sum_i a_{i-N}(N, x) sum_l C(k, l) 2^l (i/2 + l - 1)_l p_{k-l}(x)."""
    total = Poly()
    for i in range(N, 2 * N):
        inner = Poly()
        for l in range(k + 1):
            weight = binomial(k, l) * 2**l * falling_factorial(Fraction(i, 2) + l - 1, l)
            inner = inner + p[k - l].scale(weight)
        total = total + table.cell(N, i - N) * inner
    return total


def verify_theorem2(N: int, k: int, table: CoeffTable | None = None) -> VerifyReport:
    return verify_theorem2_grid(range(N, N + 1), range(k, k + 1), table)


def verify_theorem2_grid(
    Ns: Iterable[int], ks: Iterable[int], table: CoeffTable | None = None
) -> VerifyReport:
    Ns, ks = list(Ns), list(ks)
    table = _table_for(max(Ns, default=1), table)
    p = _PFamily()

    def check(N: int, k: int) -> Optional[Failure]:
        return _compare({"N": N, "k": k}, p[k + N], theorem2_rhs(N, k, table, p))

    return _run(Identity.THEOREM2, ({"N": N, "k": k} for N in Ns for k in ks), check)


# -- supporting identities ---------------------------------------------------


def verify_ode(n_max: int) -> VerifyReport:
    return _run(
        Identity.ODE,
        ({"n": n} for n in range(n_max + 1)),
        lambda n: _compare({"n": n}, Poly(), ode_residual_y(n)),
    )


def verify_genfunc(order: int) -> VerifyReport:
    scaled = generating_function(order).scaled_coeffs()
    p = _PFamily()
    return _run(
        Identity.GENFUNC,
        ({"n": n} for n in range(order + 1)),
        lambda n: _compare({"n": n}, p[n], scaled[n]),
    )


def verify_closed_form(n_max: int, table: CoeffTable | None = None) -> VerifyReport:
    table = _table_for(n_max, table)
    return _run(
        Identity.CLOSED_FORM,
        ({"N": N, "j": j} for N in range(1, n_max + 1) for j in range(N)),
        lambda N, j: _compare({"N": N, "j": j}, table.cell(N, j), coeff_closed_form(N, j)),
    )


def verify_row_sum(n_max: int, table: CoeffTable | None = None) -> VerifyReport:
    table = _table_for(n_max, table)
    p = _PFamily()

    def check(N: int) -> Optional[Failure]:
        total = Poly()
        for cell in table.row(N):
            total = total + cell
        return _compare({"N": N}, p[N], total)

    return _run(Identity.ROW_SUM, ({"N": N} for N in range(1, n_max + 1)), check)


def verify_all(
    n_max: int, k_max: int, order: int, table: CoeffTable | None = None
) -> list[VerifyReport]:
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    table = _table_for(n_max, table)
    Ns = range(1, n_max + 1)
    return [
        verify_ode(n_max),
        verify_genfunc(order),
        verify_closed_form(n_max, table),
        verify_row_sum(n_max, table),
        verify_theorem1_grid(Ns, order, table),
        verify_theorem2_grid(Ns, range(k_max + 1), table),
    ]
