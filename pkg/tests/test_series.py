"""Tail-sum families, closed forms, and the kernels.

Closed forms are pinned against independently computed targets (mpmath
constants combined by hand); truncated sums must land inside their own
rigorous error bounds; the kernels must agree between their series and
integral evaluations.
"""

from __future__ import annotations

import threading

import pytest
from mpmath import mp, mpf

from cotmoments.hpreal import eta, log2, pi
from cotmoments.series import (
    SeriesValue,
    a0,
    a0_via_recurrence,
    a1,
    a1_via_recurrence,
    euler_binomial_vanishing,
    fixed_point_bits,
    kernel_k0,
    kernel_k1,
    nested_tail_sums,
    r_even,
    r_odd,
    r_truncated_nested,
    r_via_partitions,
    s_even,
    s_odd,
)


# ---------------------------------------------------------------------------
# closed forms: frozen low-order values
# ---------------------------------------------------------------------------

def test_r_odd_low_orders():
    with mp.workdps(60):
        p = pi(55)
        assert abs(r_odd(1, 50).value - p**2 / 8) < mpf(10) ** -45
        assert abs(r_odd(2, 50).value - 5 * p**4 / 384) < mpf(10) ** -45
        assert abs(r_odd(3, 50).value - 61 * p**6 / 46080) < mpf(10) ** -44


def test_r_even_low_orders():
    with mp.workdps(60):
        p = pi(55)
        assert abs(r_even(1, 50).value - p**2 / 6) < mpf(10) ** -45
        assert abs(r_even(2, 50).value - 7 * p**4 / 360) < mpf(10) ** -45
        assert abs(r_even(3, 50).value - 31 * p**6 / 15120) < mpf(10) ** -44


def test_r_metadata():
    v = r_odd(2, 30)
    assert isinstance(v, SeriesValue)
    assert v.family == "R_odd" and v.index == 2
    assert v.method == "closed-form"
    assert r_even(1, 30).family == "R_even"


def test_r_rejects_bad_arguments():
    with pytest.raises(ValueError):
        r_odd(0, 30)
    with pytest.raises(ValueError):
        r_even(-1, 30)
    with pytest.raises(ValueError):
        r_via_partitions(1, "sideways", 30)


# ---------------------------------------------------------------------------
# partition-sum route
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kind,closed", [("odd", r_odd), ("even", r_even)])
def test_partition_route_matches_closed_form(kind, closed):
    with mp.workdps(60):
        for k in range(1, 7):
            gap = abs(closed(k, 50).value - r_via_partitions(k, kind, 50).value)
            assert gap < mpf(10) ** -40, (kind, k)


def test_partition_route_method_label():
    assert r_via_partitions(2, "odd", 30).method == "closed-form"


# ---------------------------------------------------------------------------
# a-coefficients: closed forms vs alternating recurrence
# ---------------------------------------------------------------------------

def test_a1_closed_form_values():
    with mp.workdps(50):
        p = pi(45)
        assert abs(a1(0, 40).value - 1) == 0
        assert abs(a1(1, 40).value - p**2 / 8) < mpf(10) ** -35
        assert abs(a1(2, 40).value - p**4 / 384) < mpf(10) ** -35


def test_a0_closed_form_values():
    with mp.workdps(50):
        p = pi(45)
        assert abs(a0(0, 40).value - 1) == 0
        assert abs(a0(1, 40).value - p**2 / 6) < mpf(10) ** -35
        assert abs(a0(2, 40).value - p**4 / 120) < mpf(10) ** -35


def test_a_recurrences_match_closed_forms():
    with mp.workdps(60):
        for k in range(0, 9):
            assert abs(a1(k, 50).value - a1_via_recurrence(k, 50).value) < mpf(10) ** -40
            assert abs(a0(k, 50).value - a0_via_recurrence(k, 50).value) < mpf(10) ** -40


def test_a0_one_against_brute_sum():
    """a0(1) = sum 1/n^2; brute float partial sum plus integral tail."""
    N = 100000
    brute = sum(1.0 / n**2 for n in range(1, N + 1)) + 1.0 / N
    assert abs(float(a0(1, 30).value) - brute) < 1e-9


def test_euler_binomial_vanishing_is_exact_zero():
    for k in range(1, 11):
        v = euler_binomial_vanishing(k)
        assert isinstance(v, int)
        assert v == 0
    with pytest.raises(ValueError):
        euler_binomial_vanishing(0)


# ---------------------------------------------------------------------------
# truncated nested sums with rigorous bounds
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kind,closed", [("odd", r_odd), ("even", r_even)])
def test_truncated_nested_within_bound(kind, closed):
    with mp.workdps(45):
        for k in (1, 2, 3):
            t = r_truncated_nested(k, kind, 35, N=2000)
            assert t.method == "truncated-sum"
            assert t.error_bound is not None and t.error_bound > 0
            gap = abs(t.value - closed(k, 35).value)
            assert gap <= t.error_bound, (kind, k)


def test_truncated_nested_bound_shrinks_with_n():
    with mp.workdps(40):
        loose = r_truncated_nested(2, "odd", 30, N=500)
        tight = r_truncated_nested(2, "odd", 30, N=5000)
        assert tight.error_bound < loose.error_bound
        # partial sums of positive terms increase toward the limit
        assert loose.value < tight.value < r_odd(2, 30).value


# ---------------------------------------------------------------------------
# S families
# ---------------------------------------------------------------------------

def _s_odd_targets(P):
    with mp.workdps(P + 10):
        p, l2 = pi(P + 5), log2(P + 5)
        return [p / 2 * l2, p**3 / 24 * l2 + p / 8 * eta(3, P + 5)]


def _s_even_targets(P):
    with mp.workdps(P + 10):
        p, l2 = pi(P + 5), log2(P + 5)
        return [
            p**2 / 2 * l2 - mpf(7) / 3 * eta(3, P + 5),
            p**4 / 24 * l2 + p**2 / 9 * eta(3, P + 5) - mpf(31) / 15 * eta(5, P + 5),
        ]


def test_s_odd_within_bounds():
    targets = _s_odd_targets(40)
    with mp.workdps(50):
        for l, target in enumerate(targets):
            v = s_odd(l, 40, N=20000)
            assert v.family == "S_odd" and v.index == l
            assert v.method == "truncated-sum"
            assert abs(v.value - target) <= v.error_bound, l


def test_s_even_within_bounds():
    targets = _s_even_targets(40)
    with mp.workdps(50):
        for l, target in enumerate(targets):
            v = s_even(l, 40, N=20000)
            assert v.family == "S_even" and v.index == l
            assert abs(v.value - target) <= v.error_bound, l


def test_s_bound_shrinks_with_n():
    with mp.workdps(40):
        loose = s_odd(1, 30, N=1000)
        tight = s_odd(1, 30, N=16000)
        assert tight.error_bound < loose.error_bound
        target = _s_odd_targets(30)[1]
        assert abs(tight.value - target) < abs(loose.value - target)


def test_s_values_deterministic_and_threadsafe():
    results = []

    def work():
        results.append(s_odd(1, 30, N=4000).value)

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(map(str, results))) == 1
    assert s_odd(1, 30, N=4000).value == results[0]


def test_s_rejects_bad_arguments():
    with pytest.raises(ValueError):
        s_odd(-1, 30)
    with pytest.raises(ValueError):
        s_odd(0, 5)


# ---------------------------------------------------------------------------
# tail tables
# ---------------------------------------------------------------------------

def test_tail_sums_odd_structure():
    table, bounds = nested_tail_sums("odd", 2, 5, 20000, 30)
    assert set(table) == set(range(6))
    assert len(bounds) == 3
    with mp.workdps(40):
        # depth 0 tail is identically 1
        for j in range(6):
            assert table[j][0] == 1
        # depth 1 tail at j = 0 is the full sum pi^2/8
        assert abs(table[0][1] - pi(35) ** 2 / 8) <= bounds[1]
        # tails decrease in j
        assert table[0][1] > table[3][1] > table[5][1]


def test_tail_sums_even_structure():
    table, bounds = nested_tail_sums("even", 2, 5, 20000, 30)
    assert set(table) == set(range(1, 6))
    with mp.workdps(40):
        assert abs(table[1][1] - pi(35) ** 2 / 6) <= bounds[1]
        assert table[1][2] > table[4][2]


def test_tail_sums_validation():
    with pytest.raises(ValueError):
        nested_tail_sums("odd", 2, 30, 100000, 30)  # jmax too large
    with pytest.raises(ValueError):
        nested_tail_sums("odd", 2, 10, 5, 30)  # N must exceed jmax


def test_fixed_point_bits_floor():
    assert fixed_point_bits(10) == 140
    assert fixed_point_bits(50) >= 50 * 3.32
    assert fixed_point_bits(100) > fixed_point_bits(50)


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------

def test_kernel_values_at_endpoints():
    with mp.workdps(50):
        assert kernel_k1(mpf(0), 40) == 1
        assert kernel_k0(mpf(0), 40) == 0
        assert abs(kernel_k1(mpf(1), 40) - pi(45) / 2 * log2(45)) < mpf(10) ** -30
        # K0(1) equals the second cotangent moment
        target = pi(45) ** 2 / 2 * log2(45) - mpf(7) / 3 * eta(3, 45)
        assert abs(kernel_k0(mpf(1), 40) - target) < mpf(10) ** -30


@pytest.mark.parametrize("z", ["0.125", "0.25", "0.5", "0.75", "0.9"])
def test_kernel_series_integral_agreement(z):
    P = 35
    with mp.workdps(45):
        zz = mpf(z)
        assert abs(kernel_k1(zz, P, method="series")
                   - kernel_k1(zz, P, method="integral")) < mpf(10) ** -25
        assert abs(kernel_k0(zz, P, method="series")
                   - kernel_k0(zz, P, method="integral")) < mpf(10) ** -25


def test_kernel_auto_matches_explicit_methods():
    with mp.workdps(40):
        lo, hi = mpf("0.3"), mpf("0.95")
        assert kernel_k1(lo, 30) == kernel_k1(lo, 30, method="series")
        assert abs(kernel_k1(hi, 30) - kernel_k1(hi, 30, method="integral")) == 0


def test_kernel_k1_monotone_in_z():
    with mp.workdps(40):
        vals = [kernel_k1(mpf(z) / 10, 30) for z in range(0, 11)]
        assert all(a < b for a, b in zip(vals, vals[1:]))


def test_kernel_domain_errors():
    with pytest.raises(ValueError):
        kernel_k1(mpf("-0.1"), 30)
    with pytest.raises(ValueError):
        kernel_k0(mpf("1.5"), 30)
    with pytest.raises(ValueError):
        kernel_k1(mpf("0.95"), 30, method="series")  # series cap is 0.9
    with pytest.raises(ValueError):
        kernel_k0(mpf("0.5"), 30, method="sorcery")
