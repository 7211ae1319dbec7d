from fractions import Fraction

import pytest

from besselpoly.bessel import BesselFamily, Kind, p_poly
from besselpoly.coeffs import coeffs_recurrence
from besselpoly.identities import (
    Identity,
    theorem1_sides,
    theorem2_rhs,
    verify_all,
    verify_closed_form,
    verify_row_sum,
    verify_theorem1,
    verify_theorem2,
    verify_theorem2_grid,
)

from conftest import P


@pytest.mark.parametrize("N, K", [(1, 8), (4, 8), (1, 0), (3, 1)])
def test_theorem1_cells(N, K):
    report = verify_theorem1(N, K)
    assert report.passed
    assert report.grid == [{"N": N, "K": K}]


def test_theorem1_k0_is_p1():
    lhs, rhs = theorem1_sides(1, 0)
    assert lhs[0] == rhs[0] == P(0, 1)


def test_theorem1_n4_against_listed_terms():
    # 15x(1-2t)^(-7/2) + 15x^2(1-2t)^(-3) + 6x^3(1-2t)^(-5/2) + x^4(1-2t)^(-2)
    from besselpoly.series import binom_series, generating_function

    K = 8
    F = generating_function(K)
    rhs = (
        binom_series(Fraction(-7, 2), K) * P(0, 15)
        + binom_series(-3, K) * P(0, 0, 15)
        + binom_series(Fraction(-5, 2), K) * P(0, 0, 0, 6)
        + binom_series(-2, K) * P(0, 0, 0, 0, 1)
    ) * F
    lhs, _ = theorem1_sides(4, K)
    assert lhs == rhs


def test_theorem2_by_hand():
    t = coeffs_recurrence(2)
    fam = BesselFamily(Kind.P, 3)
    assert theorem2_rhs(1, 0, t, fam) == P(0, 1)
    # x (p_1 + 2 (1/2) p_0) = x (x + 1)
    assert theorem2_rhs(1, 1, t, fam) == P(0, 1, 1)
    assert theorem2_rhs(2, 0, t, fam) == P(0, 1, 1)


@pytest.mark.parametrize("N", range(1, 9))
def test_theorem2_grid(N):
    report = verify_theorem2_grid([N], range(13))
    assert report.passed, report.failures[:1]
    assert len(report.grid) == 13


def test_theorem2_single():
    r = verify_theorem2(3, 4)
    assert r.passed and r.identity is Identity.THEOREM2 and r.grid == [{"N": 3, "k": 4}]


def test_rising_convention_would_fail():
    # replacing the falling factorial by a rising one breaks the identity
    from besselpoly.exactmath import binomial

    def rising(x, n):
        out = Fraction(1)
        for m in range(n):
            out *= x + m
        return out

    N, k = 2, 2
    t = coeffs_recurrence(N)
    rhs = P()
    for i in range(N, 2 * N):
        inner = P()
        for l in range(k + 1):
            inner = inner + p_poly(k - l).scale(binomial(k, l) * 2**l * rising(Fraction(i, 2) + l - 1, l))
        rhs = rhs + t.cell(N, i - N) * inner
    assert rhs != p_poly(k + N)


@pytest.mark.parametrize("args", [(4, 6, 10), (1, 0, 1)])
def test_verify_all_passes(args):
    reports = verify_all(*args)
    assert [r.identity for r in reports] == [
        Identity.ODE,
        Identity.GENFUNC,
        Identity.CLOSED_FORM,
        Identity.ROW_SUM,
        Identity.THEOREM1,
        Identity.THEOREM2,
    ]
    assert all(r.passed for r in reports)


def test_verify_all_grids_are_exact():
    reports = {r.identity: r for r in verify_all(3, 2, 5)}
    assert reports[Identity.ODE].grid == [{"n": n} for n in range(4)]
    assert reports[Identity.GENFUNC].grid == [{"n": n} for n in range(6)]
    assert len(reports[Identity.CLOSED_FORM].grid) == 6
    assert reports[Identity.THEOREM1].grid == [{"N": N, "K": 5} for N in (1, 2, 3)]
    assert len(reports[Identity.THEOREM2].grid) == 9


def test_corrupted_cell_is_reported_with_witness():
    bad = coeffs_recurrence(4).perturbed(3, 1)
    reports = {r.identity: r for r in verify_all(4, 3, 6, table=bad)}
    assert reports[Identity.ODE].passed and reports[Identity.GENFUNC].passed
    cf = reports[Identity.CLOSED_FORM].failures
    assert [f.params for f in cf] == [{"N": 3, "j": 1}]
    assert cf[0].index == 2
    assert cf[0].expected == P(0, 0, 4) and cf[0].actual == P(0, 0, 3)
    rs = reports[Identity.ROW_SUM].failures
    assert [f.params for f in rs] == [{"N": 3}]
    assert rs[0].expected == p_poly(3) and rs[0].actual == p_poly(3) + P(0, 0, 1)
    t1 = reports[Identity.THEOREM1].failures
    assert [f.params for f in t1] == [{"N": 3, "K": 6}]
    t2 = reports[Identity.THEOREM2].failures
    assert [f.params for f in t2] == [{"N": 3, "k": k} for k in range(4)]

    # rerunning a reported cell reproduces the mismatch exactly
    for f in t2:
        again = verify_theorem2(f.params["N"], f.params["k"], table=bad).failures
        assert again == [f]
    assert verify_theorem1(3, 6, table=bad).failures == t1
    assert verify_row_sum(4, bad).failures == rs
    assert verify_closed_form(4, bad).failures == cf


def test_report_json_shape():
    bad = coeffs_recurrence(2).perturbed(2, 0)
    obj = verify_row_sum(2, bad).to_json()
    assert list(obj) == ["identity", "grid", "passed", "failures"]
    assert obj["identity"] == "RowSum" and obj["passed"] is False
    assert obj["failures"][0] == {
        "params": {"N": 2},
        "index": 2,
        "expected": {"coeffs": ["0", "1", "1"]},
        "actual": {"coeffs": ["0", "1", "2"]},
    }
