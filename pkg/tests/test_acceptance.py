"""Acceptance gate: nine binding criteria, one test per criterion.

Each test performs the full check at its contractual settings, asserts the
contractual tolerance (never the looser internal bound), and enforces the
wall-clock budget.  A printed PASS line per criterion lands in the captured
output; the per-test pytest verdict is the machine-readable result.
"""

from __future__ import annotations

import time

from mpmath import mp, mpf

from cotmoments.cfn import (
    check_factorial_relation,
    check_generating_functions,
    check_reference_values,
)
from cotmoments.moments import (
    c_cfn_route,
    c_eta_route,
    c_nested_route,
    verify_consequences,
    verify_h_integral_reduction,
)
from cotmoments.quadrature import integrate_1d, moment_quadrature
from cotmoments.series import (
    a0,
    a0_via_recurrence,
    a1,
    a1_via_recurrence,
    euler_binomial_vanishing,
    r_even,
    r_odd,
    r_truncated_nested,
    r_via_partitions,
)


def _report(n: int, label: str, started: float, budget: float) -> None:
    elapsed = time.perf_counter() - started
    assert elapsed < budget, f"criterion {n} overran: {elapsed:.1f}s >= {budget}s"
    print(f"criterion {n} ({label}): PASS in {elapsed:.2f}s (budget {budget:.0f}s)")


def test_criterion_1_exact_reference_tables():
    started = time.perf_counter()
    rep = check_reference_values()
    assert rep.all_passed, [c.id for c in rep.failing()]
    assert rep.pass_count == 120  # 36 + 36 + 24 + 24 entries, all exact
    _report(1, "frozen t/H tables exact", started, 1.0)


def test_criterion_2_factorial_relations():
    started = time.perf_counter()
    rep = check_factorial_relation(12, 20)
    assert rep.all_passed, [c.id for c in rep.failing()]
    _report(2, "factorial relations k<=12, n<=20", started, 5.0)


def test_criterion_3_generating_function_coefficients():
    started = time.perf_counter()
    rep = check_generating_functions(4, 31)  # covers n <= 15 for k <= 4
    assert rep.all_passed, [c.id for c in rep.failing()]
    ids = {c.id for c in rep.checks}
    assert "gf-even/k=4,n=15" in ids and "gf-odd/k=4,n=15" in ids
    _report(3, "power-series coefficients exact", started, 10.0)


def test_criterion_4_route_agreement():
    started = time.perf_counter()
    with mp.workdps(60):
        ref = {m: c_eta_route(m, 50).value for m in range(1, 9)}
        for m in range(1, 9):
            gap = abs(moment_quadrature(m, 50) - ref[m])
            assert gap < mpf(10) ** -35, (m, gap)
        for m in range(1, 7):
            gap = abs(c_cfn_route(m, 50, N=10**6).value - ref[m])
            assert gap < mpf(10) ** -7, (m, gap)
        for m in range(1, 7):
            gap = abs(c_nested_route(m, 50, N=10**5).value - ref[m])
            assert gap < mpf(10) ** -4, (m, gap)
    _report(4, "four routes agree", started, 300.0)


def test_criterion_5_r_closed_forms():
    started = time.perf_counter()
    with mp.workdps(60):
        for k in range(1, 7):
            assert abs(r_odd(k, 50).value
                       - r_via_partitions(k, "odd", 50).value) < mpf(10) ** -40, k
            assert abs(r_even(k, 50).value
                       - r_via_partitions(k, "even", 50).value) < mpf(10) ** -40, k
        for k in range(1, 4):
            t = r_truncated_nested(k, "odd", 50)
            assert abs(t.value - r_odd(k, 50).value) <= t.error_bound, k
            t = r_truncated_nested(k, "even", 50)
            assert abs(t.value - r_even(k, 50).value) <= t.error_bound, k
    _report(5, "R closed forms vs partition/truncated routes", started, 30.0)


def test_criterion_6_a_recurrences_and_vanishing():
    started = time.perf_counter()
    with mp.workdps(60):
        for k in range(0, 7):
            assert abs(a1(k, 50).value
                       - a1_via_recurrence(k, 50).value) < mpf(10) ** -40, k
            assert abs(a0(k, 50).value
                       - a0_via_recurrence(k, 50).value) < mpf(10) ** -40, k
    for k in range(1, 11):
        assert euler_binomial_vanishing(k) == 0, k
    _report(6, "a-coefficient recurrences + exact vanishing", started, 5.0)


def test_criterion_7_consequence_identities():
    started = time.perf_counter()
    rep = verify_consequences(30, N=10**5)
    assert rep.all_passed, [c.id for c in rep.failing()]
    with mp.workdps(40):
        for c in rep.checks:
            if "nested-vs-closed" in c.id:
                assert mpf(c.diff) < mpf(10) ** -4, c.id
            elif "quadrature-vs-closed" in c.id or "dimension-one" in c.id:
                assert mpf(c.diff) < mpf(10) ** -12, c.id
    _report(7, "consequence identities by 2+ routes", started, 120.0)


def test_criterion_8_h_reduction():
    started = time.perf_counter()
    for k in (0, 1, 2):
        rep = verify_h_integral_reduction(k, 10, 10**5, 50)
        assert rep.all_passed, (k, [c.id for c in rep.failing()])
    _report(8, "H columns from truncated tails", started, 60.0)


def test_criterion_9_power_log_integrals():
    started = time.perf_counter()
    with mp.workdps(40):
        for j in range(0, 7):
            for l in range(0, 4):
                res = integrate_1d(
                    lambda x, da, db: da ** j * mp.log(da) ** l, 0, 1, 30)
                target = mpf((-1) ** l) * mp.factorial(l) / mpf(j + 1) ** (l + 1)
                assert abs(res.value - target) < mpf(10) ** -20, (j, l)
    _report(9, "power-log integral reductions", started, 10.0)
