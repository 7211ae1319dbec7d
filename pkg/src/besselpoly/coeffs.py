"""The coefficients a_j(N, x) in

    (d/dt)^N F = sum_{i=N}^{2N-1} a_{i-N}(N, x) (1 - 2t)^(-i/2) F,
    F(t, x) = exp(x (1 - sqrt(1 - 2t))).

The recurrence obtained by differentiating once more is the ground truth.
The nested-sum closed form is exponential in j and exists to be checked
against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import ExactMathError
from .poly import Poly


@dataclass(frozen=True)
class CoeffTable:
    """Triangular table; ``rows[N-1][j]`` is a_j(N, x) for 0 <= j <= N-1."""

    n_max: int
    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.n_max:
            raise ValueError(f"expected {self.n_max} rows, got {len(self.rows)}")
        for N, row in enumerate(self.rows, start=1):
            if len(row) != N:
                raise ValueError(f"row {N} has {len(row)} cells, expected {N}")

    def row(self, N: int) -> tuple[Poly, ...]:
        if not 1 <= N <= self.n_max:
            raise IndexError(f"row N={N} outside 1..{self.n_max}")
        return self.rows[N - 1]

    def cell(self, N: int, j: int) -> Poly:
        row = self.row(N)
        if not 0 <= j < N:
            raise IndexError(f"a_{j}({N}, x) is outside the table")
        return row[j]

    def perturbed(self, N: int, j: int, delta: int = 1) -> CoeffTable:
        """Copy with the monomial coefficient of a_j(N, x) shifted by delta."""
        cell = self.cell(N, j)
        bumped = cell + Poly.monomial(delta, N - j)
        rows = list(self.rows)
        row = list(rows[N - 1])
        row[j] = bumped
        rows[N - 1] = tuple(row)
        return CoeffTable(self.n_max, tuple(rows))


def coeffs_recurrence(n_max: int) -> CoeffTable:
    if n_max < 1:
        raise ExactMathError(f"n_max must be >= 1, got {n_max}")
    x = Poly.x()
    rows = [(x,)]
    for N in range(1, n_max):
        prev = rows[-1]
        nxt = [x * prev[0]]
        # a_{i-N}(N+1) = (i-1) a_{i-N-1}(N) + x a_{i-N}(N), N+1 <= i <= 2N-1
        for i in range(N + 1, 2 * N):
            nxt.append(prev[i - N - 1].scale(i - 1) + x * prev[i - N])
        nxt.append(prev[N - 1].scale(2 * N - 1))
        rows.append(tuple(nxt))
    return CoeffTable(n_max, tuple(rows))


def closed_form_coefficient(N: int, j: int) -> tuple[int, int]:
    """Integer c with a_j(N, x) = c x^(N-j), and the number of index tuples summed.

    Sums prod_{k=1}^{j} (N - (i_j + ... + i_k) - (j - 2k + 2)) over all
    (i_1, ..., i_j) >= 0 with i_1 + ... + i_j <= N - j - 1, enumerated
    odometer-style with the tail sums i_j + ... + i_k kept incrementally.
    """
    if N < 1 or not 0 <= j <= N - 1:
        raise ExactMathError(f"a_{j}({N}, x) needs N >= 1 and 0 <= j <= N-1")
    if j == 0:
        return 1, 1
    bound = N - j - 1

    def factor(k: int, tail: int) -> int:
        return N - tail - (j - 2 * k + 2)

    idx = [0] * (j + 2)
    tail = [0] * (j + 2)  # tail[k] = idx[j] + ... + idx[k]; tail[j+1] = 0
    prod = [1] * (j + 2)  # prod[k] = factors for levels j..k
    for k in range(j, 0, -1):
        prod[k] = prod[k + 1] * factor(k, 0)

    total = 0
    count = 0
    while True:
        total += prod[1]
        count += 1
        k = 1
        while k <= j and tail[k] + 1 > bound:
            k += 1
        if k > j:
            break
        idx[k] += 1
        tail[k] += 1
        prod[k] = prod[k + 1] * factor(k, tail[k])
        for m in range(k - 1, 0, -1):
            idx[m] = 0
            tail[m] = tail[m + 1]
            prod[m] = prod[m + 1] * factor(m, tail[m])
    return total, count


def coeff_closed_form(N: int, j: int) -> Poly:
    c, _ = closed_form_coefficient(N, j)
    return Poly.monomial(c, N - j)


def closed_form_term_count(N: int, j: int) -> int:
    return closed_form_coefficient(N, j)[1]


def coeffs_closed_form(n_max: int) -> CoeffTable:
    if n_max < 1:
        raise ExactMathError(f"n_max must be >= 1, got {n_max}")
    rows = tuple(
        tuple(coeff_closed_form(N, j) for j in range(N)) for N in range(1, n_max + 1)
    )
    return CoeffTable(n_max, rows)


def coeff_sum_row(N: int, table: CoeffTable | None = None) -> Poly:
    """sum_j a_j(N, x); equals p_N(x) because every factor is 1 at t = 0."""
    if table is None:
        table = coeffs_recurrence(N)
    total = Poly()
    for cell in table.row(N):
        total = total + cell
    return total


def monomial_coefficient(p: Poly) -> Fraction:
    """Coefficient of a single-term polynomial."""
    if not p.is_monomial():
        raise ExactMathError(f"{p} is not a monomial")
    return p[int(p.degree)]
