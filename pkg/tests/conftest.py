from fractions import Fraction

from hypothesis import strategies as st

from besselpoly.poly import Poly

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
polys = st.lists(st.fractions(max_denominator=12).filter(lambda q: abs(q) < 100), max_size=7).map(Poly)


def P(*coeffs):
    """Poly from ascending coefficients, written as ints or 'p/q' strings."""
    return Poly(Fraction(c) for c in coeffs)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_ac" in report.nodeid:
        _acceptance.append(report)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for rep in sorted(_acceptance, key=lambda r: r.nodeid):
        name = rep.nodeid.split("::")[-1]
        status = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({rep.duration:.2f}s)")
