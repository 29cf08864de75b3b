"""Moments of the half-angle cotangent, and the verification suites.

C(m) is the normalized moment (1/m!) int_0^pi (x^m / 2) cot(x/2) dx.  Four
independent routes compute it:

* eta-closed-form — the finite linear combination of eta/zeta values at odd
  integers (exact modulo the constants' own precision);
* cfn-series — the central-binomial series whose coefficients are the exact
  H-triangles, summed in fixed-point integers with a calibrated tail bound;
* nested-series — pi-power combinations of the S_odd/S_even suffix-nested
  sums, each carrying a propagated tail bound;
* quadrature — direct tanh-sinh integration of the defining integral.

No route shares code with another past the constants layer, which is what
makes the cross-route agreement checks in `run_suite` meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from mpmath import mp, mpf

from . import cfn
from .hpreal import GUARD_DIGITS, _require_digits, eta, zeta, zeta_even_closed
from .quadrature import (
    default_tolerance,
    integrate_1d,
    integrate_2d_iterated,
    moment_quadrature,
)
from .report import VerificationReport
from .series import (
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

__all__ = [
    "MomentValue",
    "ROUTES",
    "SUITES",
    "c_eta_route",
    "c_cfn_route",
    "c_nested_route",
    "compute_moment",
    "binomial_gf_identities",
    "verify_consequences",
    "verify_h_integral_reduction",
    "run_suite",
]

ROUTES = ("eta-closed-form", "cfn-series", "nested-series", "quadrature")

SUITES = ("all", "tables", "closed-forms", "consequences", "gf", "routes",
          "h-reduction")

_DEFAULT_N = 100000


@dataclass(frozen=True)
class MomentValue:
    """One computed moment.  truncation is the term count for series routes;
    error_bound is the route's own accuracy claim (None for the closed form,
    whose error is a few ulps at the working precision)."""

    m: int
    route: str
    value: mpf
    truncation: Optional[int] = None
    error_bound: Optional[mpf] = None


def _fmt(P: int) -> Callable[[object], str]:
    digits = max(P, 12)
    return lambda v: mp.nstr(mpf(v), digits)


# ---------------------------------------------------------------------------
# route 1: eta/zeta closed form
# ---------------------------------------------------------------------------

def c_eta_route(m: int, P: int) -> MomentValue:
    """C(m) = sum_{l=0}^{floor(m/2)} (-1)^l pi^(m-2l)/(m-2l)! eta(2l+1)
              + [m even] (-1)^(m/2) zeta(m+1).

    The single finite closed form; every other route is checked against it.
    """
    if m < 1:
        raise ValueError(f"c_eta_route: need m >= 1, got {m}")
    _require_digits(P)
    with mp.workdps(P + GUARD_DIGITS):
        acc = mpf(0)
        for l in range(m // 2 + 1):
            p = m - 2 * l
            acc += (-1) ** l * mp.pi ** p / mp.factorial(p) * eta(2 * l + 1, P + 5)
        if m % 2 == 0:
            acc += (-1) ** (m // 2) * zeta(m + 1, P + 5)
        value = +acc
    return MomentValue(m=m, route="eta-closed-form", value=value)


# ---------------------------------------------------------------------------
# route 2: central-binomial series with exact H-triangle coefficients
# ---------------------------------------------------------------------------

def c_cfn_route(m: int, P: int, N: int = _DEFAULT_N) -> MomentValue:
    """C(m) through the central-binomial series

        C(2k+1) = 2^(2k+1) sum_{j>=0} C(2j,j) 4^-j H1(k,j) / (2j+1)^2
        C(2k)   = (1/2)    sum_{j>=1} 4^j H0(k,j) / (j^3 C(2j,j))

    summed to N terms in fixed-point integers (the H-values are built by
    their strict-prefix recurrences in the same sweep, never as rationals).
    Terms decay like j^(-5/2); the returned bound is the integral-comparison
    tail (2/3) N t_N with a 1.05 calibration factor, plus the fixed-point
    rounding allowance.
    """
    if m < 1:
        raise ValueError(f"c_cfn_route: need m >= 1, got {m}")
    if N < m:
        raise ValueError(f"c_cfn_route: need N >= m, got N={N}, m={m}")
    _require_digits(P)
    fbits = fixed_point_bits(P)
    one = 1 << fbits
    total = 0
    last = 0
    if m % 2:  # odd: m = 2k+1
        k = (m - 1) // 2
        h = [one] + [0] * k          # h[i] = H1(i, j), strict prefix DP
        ratio = one                   # C(2j,j)/4^j
        for j in range(N + 1):
            if j:
                w = one // (2 * j - 1) ** 2
                for i in range(k, 0, -1):
                    h[i] += (h[i - 1] * w) >> fbits
                ratio = ratio * (2 * j - 1) // (2 * j)
            last = ((ratio // (2 * j + 1) ** 2) * h[k]) >> fbits
            total += last
        scale_num, scale_den = 2 ** (2 * k + 1), 1
    else:      # even: m = 2k
        k = m // 2
        h = [0] * (k + 1)             # h[i] = H0(i, j); H0(1, j) = 1 for j >= 1
        ratio = one                   # 4^j / C(2j,j)
        for j in range(1, N + 1):
            ratio = ratio * (2 * j) // (2 * j - 1)
            if j == 1:
                h[1] = one
            else:
                w = one // (j - 1) ** 2
                for i in range(k, 1, -1):
                    h[i] += (h[i - 1] * w) >> fbits
            last = ((ratio // (2 * j ** 3)) * h[k]) >> fbits
            total += last
        scale_num, scale_den = 1, 1   # the 1/2 is folded into 2 j^3
    with mp.workdps(P + GUARD_DIGITS):
        unit = mpf(2) ** (-fbits)
        scale = mpf(scale_num) / scale_den
        value = +(total * unit * scale)
        tail = mpf("1.05") * (mpf(2) / 3) * N * (last * unit)
        fp_err = (k + 3) * (N + 1) * unit
        bound = +((tail + fp_err) * scale)
    return MomentValue(m=m, route="cfn-series", value=value,
                       truncation=N, error_bound=bound)


# ---------------------------------------------------------------------------
# route 3: nested S-series combination
# ---------------------------------------------------------------------------

def c_nested_route(m: int, P: int, N: int = _DEFAULT_N) -> MomentValue:
    """C(m) as a pi-power combination of the S families:

        C(2k+1) = sum_{l=0}^{k} (-1)^l 2^(2l+1) pi^(2k-2l)/(2k-2l)!   S_odd(l)
        C(2k+2) = sum_{l=0}^{k} (-1)^l         pi^(2k-2l)/(2k-2l+1)! S_even(l)

    with the error bound propagated through the absolute weights.
    """
    if m < 1:
        raise ValueError(f"c_nested_route: need m >= 1, got {m}")
    _require_digits(P)
    if m % 2:
        k = (m - 1) // 2
        series = [s_odd(l, P, N) for l in range(k, -1, -1)]
    else:
        k = (m - 2) // 2
        series = [s_even(l, P, N) for l in range(k, -1, -1)]
    series.reverse()  # index by l again
    with mp.workdps(P + GUARD_DIGITS):
        acc = mpf(0)
        err = mpf(0)
        for l in range(k + 1):
            if m % 2:
                weight = mpf(2) ** (2 * l + 1) * mp.pi ** (2 * k - 2 * l) \
                    / mp.factorial(2 * k - 2 * l)
            else:
                weight = mp.pi ** (2 * k - 2 * l) / mp.factorial(2 * k - 2 * l + 1)
            acc += (-1) ** l * weight * series[l].value
            err += weight * series[l].error_bound
        value = +acc
        bound = +err
    return MomentValue(m=m, route="nested-series", value=value,
                       truncation=N, error_bound=bound)


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

_ROUTE_ALIASES = {
    "eta": "eta-closed-form",
    "eta-closed-form": "eta-closed-form",
    "cfn": "cfn-series",
    "cfn-series": "cfn-series",
    "nested": "nested-series",
    "nested-series": "nested-series",
    "quad": "quadrature",
    "quadrature": "quadrature",
}


def compute_moment(m: int, P: int, route: str = "eta",
                   N: Optional[int] = None, tol=None) -> MomentValue:
    """One C(m) by the named route (aliases: eta, cfn, nested, quadrature)."""
    canonical = _ROUTE_ALIASES.get(route)
    if canonical is None:
        raise ValueError(f"unknown route {route!r}; pick from {ROUTES}")
    if canonical == "eta-closed-form":
        return c_eta_route(m, P)
    if canonical == "cfn-series":
        return c_cfn_route(m, P, N if N is not None else _DEFAULT_N)
    if canonical == "nested-series":
        return c_nested_route(m, P, N if N is not None else _DEFAULT_N)
    value = moment_quadrature(m, P, tol)
    with mp.workdps(P + GUARD_DIGITS):
        bound = +(default_tolerance(P) if tol is None else mpf(tol))
    return MomentValue(m=m, route="quadrature", value=value, error_bound=bound)


# ---------------------------------------------------------------------------
# the four consequence identities
# ---------------------------------------------------------------------------

def _ci1(x, da, db):
    # -log(x) / sqrt(1 - x^2) on [0, 1]; 1 - x^2 = db (1 + x) exactly
    return -mp.log(x) / mp.sqrt(db * (1 + x))


def _ci3(x, da, db):
    # asin(sqrt x)^2 / x on [0, 1]; near 1 fold the arcsine through db
    if x > mpf("0.5"):
        s = mp.pi / 2 - mp.asin(mp.sqrt(db))
    else:
        s = mp.asin(mp.sqrt(x))
    return s * s / x


def _ci2_factory():
    cache: Dict[mpf, tuple] = {}

    def f(x0, da0, db0, x1, da1, db1):
        # log(x0) log(x1) / (sqrt(1 - x0^2 x1^2) (1 - x1^2))
        pre = cache.get(x1)
        if pre is None:
            q1 = db1 * (1 + x1)               # 1 - x1^2, exactly
            pre = (mp.log(x1) / q1, q1)
            cache[x1] = pre
        log_ratio, q1 = pre
        inner = db0 * (1 + x0) + x0 * x0 * q1  # 1 - x0^2 x1^2, exactly
        return mp.log(x0) * log_ratio / mp.sqrt(inner)

    return f


def _ci4_factory():
    cache: Dict[mpf, mpf] = {}

    def f(x0, da0, db0, x1, da1, db1):
        # asin^2(sqrt(x0 x1)) / (x0 x1) * log(x1)/(1 - x1)
        pre = cache.get(x1)
        if pre is None:
            pre = mp.log(x1) / db1             # 1 - x1 = db1 exactly
            cache[x1] = pre
        t = x0 * x1
        u = db0 + x0 * db1                     # 1 - x0 x1, exactly
        if t > mpf("0.5"):
            s = mp.pi / 2 - mp.asin(mp.sqrt(u))
        else:
            s = mp.asin(mp.sqrt(t))
        return s * s / t * pre

    return f


_CONSEQUENCE_ANCHORS = {
    1: "int_0^1 -log(x)/sqrt(1-x^2) dx = (pi/2) log2 = S_odd(0)",
    2: "int int log(x0)log(x1)/(sqrt(1-x0^2 x1^2)(1-x1^2)) = pi^3/24 log2 + pi/8 eta(3) = S_odd(1)",
    3: "int_0^1 asin^2(sqrt x)/x dx = pi^2/2 log2 - 7/3 eta(3) = S_even(0)",
    4: "int int asin^2(sqrt(x0 x1))/(x0 x1) * log(x1)/(1-x1) = -pi^4/24 log2 - pi^2/9 eta(3) + 31/15 eta(5) = -S_even(1)",
}


def verify_consequences(P: int, N: int = _DEFAULT_N, tol=None) -> VerificationReport:
    """The four k = 0, 1 identities, each computed three independent ways:
    truncated nested series, tanh-sinh quadrature (1-D or 2-D), and the
    closed form in the {pi, log2, eta(3), eta(5)} basis."""
    _require_digits(P)
    if N < 1:
        raise ValueError(f"verify_consequences: need N >= 1, got {N}")
    report = VerificationReport("consequences", config={"digits": P, "N": N})
    fmt = _fmt(P)
    with mp.workdps(P + GUARD_DIGITS):
        tol_q = default_tolerance(P) if tol is None else mpf(tol)
        report.config["tol"] = mp.nstr(tol_q, 5)
        lg2 = eta(1, P + 5)
        e3 = eta(3, P + 5)
        e5 = eta(5, P + 5)
        closed = {
            1: mp.pi / 2 * lg2,
            2: mp.pi ** 3 / 24 * lg2 + mp.pi / 8 * e3,
            3: mp.pi ** 2 / 2 * lg2 - mpf(7) / 3 * e3,
            4: -mp.pi ** 4 / 24 * lg2 - mp.pi ** 2 / 9 * e3 + mpf(31) / 15 * e5,
        }

        sv1 = s_odd(0, P, N)
        sv2 = s_odd(1, P, N)
        sv3 = s_even(0, P, N)
        sv4 = s_even(1, P, N)
        nested = {
            1: (sv1.value, sv1.error_bound),
            2: (sv2.value, sv2.error_bound),
            3: (sv3.value, sv3.error_bound),
            4: (-sv4.value, sv4.error_bound),
        }
        for i in range(1, 5):
            val, bound = nested[i]
            report.add_numeric(f"consequence-{i}/nested-vs-closed",
                               _CONSEQUENCE_ANCHORS[i], val, closed[i],
                               tol=bound, fmt=fmt)

        quad = {
            1: integrate_1d(_ci1, 0, 1, P, tol_q).value,
            2: integrate_2d_iterated(_ci2_factory(), P, tol_q).value,
            3: integrate_1d(_ci3, 0, 1, P, tol_q).value,
            4: integrate_2d_iterated(_ci4_factory(), P, tol_q).value,
        }
        for i in range(1, 5):
            report.add_numeric(f"consequence-{i}/quadrature-vs-closed",
                               _CONSEQUENCE_ANCHORS[i], quad[i], closed[i],
                               tol=tol_q, fmt=fmt)

        # the same first integral, doubled, is the first moment
        c1 = c_eta_route(1, P).value
        report.add_numeric("consequence-1/dimension-one",
                           "-2 int_0^1 log(x)/sqrt(1-x^2) dx = C(1) = pi log2",
                           2 * quad[1], c1, tol=2 * tol_q, fmt=fmt)
    return report


# ---------------------------------------------------------------------------
# H-triangle reduction to pi-weighted nested tail sums
# ---------------------------------------------------------------------------

def verify_h_integral_reduction(k: int, jmax: int, N: int, P: int) -> VerificationReport:
    """Reproduce the exact H-triangle columns from truncated tail sums:

        H1(k, j)   = sum_{l=0}^{k} (pi/2)^(2l)/(2l)!  (-1)^(k-l) T_{k-l}(j)
        H0(k+1, j) = sum_{l=0}^{k} pi^(2l)/(2l+1)!    (-1)^(k-l) T_{k-l}(j)

    where T_d(j) are the d-fold weakly-increasing tail sums of 1/(2i+1)^2
    (odd side) or 1/i^2 (even side) starting at j.  Tolerances are the
    rigorous truncation bounds of the T values, pushed through the absolute
    weights."""
    if not 0 <= k <= 3:
        raise ValueError(f"verify_h_integral_reduction: need 0 <= k <= 3, got {k}")
    if not 1 <= jmax <= 20:
        raise ValueError(f"verify_h_integral_reduction: need 1 <= jmax <= 20, got {jmax}")
    _require_digits(P)
    report = VerificationReport("h-reduction",
                                config={"digits": P, "N": N, "k": k, "jmax": jmax})
    fmt = _fmt(P)
    odd_tails, odd_bounds = nested_tail_sums("odd", k, jmax, N, P)
    even_tails, even_bounds = nested_tail_sums("even", k, jmax, N, P)
    h1 = cfn.build_h1(k, jmax)
    h0 = cfn.build_h0(k + 1, jmax)
    with mp.workdps(P + GUARD_DIGITS):
        w_odd = [(mp.pi / 2) ** (2 * l) / mp.factorial(2 * l) for l in range(k + 1)]
        w_even = [mp.pi ** (2 * l) / mp.factorial(2 * l + 1) for l in range(k + 1)]
        for j in range(1, jmax + 1):
            acc = mpf(0)
            bound = mpf(0)
            for l in range(k + 1):
                acc += w_odd[l] * (-1) ** (k - l) * odd_tails[j][k - l]
                bound += w_odd[l] * odd_bounds[k - l]
            exact = h1[k, j]
            report.add_numeric(
                f"h1-reduction/k={k},j={j}",
                "H1(k,j) = sum_l (pi/2)^(2l)/(2l)! (-1)^(k-l) T_(k-l)(j), odd tails",
                acc, mpf(exact.numerator) / exact.denominator,
                tol=+bound, fmt=fmt)
        for j in range(1, jmax + 1):
            acc = mpf(0)
            bound = mpf(0)
            for l in range(k + 1):
                acc += w_even[l] * (-1) ** (k - l) * even_tails[j][k - l]
                bound += w_even[l] * even_bounds[k - l]
            exact = h0[k + 1, j]
            report.add_numeric(
                f"h0-reduction/k={k + 1},j={j}",
                "H0(k+1,j) = sum_l pi^(2l)/(2l+1)! (-1)^(k-l) T_(k-l)(j), even tails",
                acc, mpf(exact.numerator) / exact.denominator,
                tol=+bound, fmt=fmt)
    return report


# ---------------------------------------------------------------------------
# generating-function identities at sample points
# ---------------------------------------------------------------------------

def binomial_gf_identities(P: int, samples: Optional[Sequence] = None) -> VerificationReport:
    """The two central-binomial generating functions, evaluated numerically:

        sum_j C(2j,j) (x/2)^(2j)        = 1/sqrt(1 - x^2)
        (1/2) sum_j (2x)^(2j)/(j^2 C(2j,j)) = asin^2(x)

    Each sample in [0, 0.9] must match to 10^-(P-10)."""
    _require_digits(P)
    if samples is None:
        samples = ("0", "0.25", "0.5", "0.75", "0.9")
    report = VerificationReport("gf-identities", config={"digits": P})
    fmt = _fmt(P)
    with mp.workdps(P + GUARD_DIGITS):
        tol = mpf(10) ** (-(P - 10))
        report.config["tol"] = mp.nstr(tol, 5)
        target = mpf(10) ** (-(P + 5))
        for sample in samples:
            x = mpf(sample if isinstance(sample, str) else str(sample))
            if not 0 <= x <= mpf("0.9"):
                raise ValueError(
                    f"binomial_gf_identities: samples must lie in [0, 0.9], got {sample!r}")
            label = mp.nstr(x, 8)
            xx = x * x
            # identity 1: sum_j C(2j,j) (x/2)^(2j) = (1 - x^2)^(-1/2)
            term = mpf(1)
            acc = mpf(1)
            j = 0
            while term >= target * (1 - xx):
                j += 1
                term *= xx * (2 * j - 1) / (2 * j)
                acc += term
            report.add_numeric(f"gf-sqrt/x={label}",
                               "sum C(2j,j)(x/2)^(2j) = 1/sqrt(1-x^2)",
                               acc, 1 / mp.sqrt(1 - xx), tol=tol, fmt=fmt)
            # identity 2: (1/2) sum_{j>=1} (2x)^(2j)/(j^2 C(2j,j)) = asin(x)^2
            term = xx        # j = 1: (1/2)(2x)^2 / C(2,1) = x^2
            acc = +term
            j = 1
            while True:
                j += 1
                term *= 2 * xx * j / (2 * j - 1)
                contrib = term / (j * j)
                acc += contrib
                if contrib < target * (1 - xx):
                    break
            report.add_numeric(f"gf-arcsin2/x={label}",
                               "(1/2) sum (2x)^(2j)/(j^2 C(2j,j)) = asin(x)^2",
                               acc, mp.asin(x) ** 2, tol=tol, fmt=fmt)
    return report

# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _suite_tables() -> VerificationReport:
    report = VerificationReport("tables")
    report.extend(cfn.check_reference_values(), prefix="reference")
    report.extend(cfn.check_factorial_relation(5, 10), prefix="factorial")
    return report


def _suite_closed_forms(P: int, N_trunc: int = 10000) -> VerificationReport:
    report = VerificationReport("closed-forms", config={"digits": P})
    fmt = _fmt(P)
    with mp.workdps(P + GUARD_DIGITS):
        tol8 = mpf(10) ** (-(P - 8))
        report.config["tol"] = mp.nstr(tol8, 5)
        for k in range(1, 7):
            report.add_numeric(
                f"r-odd-partitions/k={k}",
                "cycle-index sum over partitions = (pi/2)^(2k) E*_2k/(2k)!",
                r_via_partitions(k, "odd", P).value, r_odd(k, P).value,
                tol=tol8, fmt=fmt)
            report.add_numeric(
                f"r-even-partitions/k={k}",
                "cycle-index sum over partitions = 2(2^(2k-1)-1)|B_2k| pi^(2k)/(2k)!",
                r_via_partitions(k, "even", P).value, r_even(k, P).value,
                tol=tol8, fmt=fmt)
        for k in range(7):
            report.add_numeric(
                f"a1-recurrence/k={k}",
                "alternating R_odd recurrence rebuilds (pi/2)^(2k)/(2k)!",
                a1_via_recurrence(k, P).value, a1(k, P).value,
                tol=tol8, fmt=fmt)
            report.add_numeric(
                f"a0-recurrence/k={k}",
                "alternating R_even recurrence rebuilds pi^(2k)/(2k+1)!",
                a0_via_recurrence(k, P).value, a0(k, P).value,
                tol=tol8, fmt=fmt)
        for k in range(1, 11):
            report.add_exact(
                f"euler-vanishing/k={k}",
                "sum_l (-1)^(l+1) C(2k,2l) E*_2l = 0",
                euler_binomial_vanishing(k), 0)
        for k in range(1, 4):
            for kind in ("odd", "even"):
                sv = r_truncated_nested(k, kind, P, N_trunc)
                closed = (r_odd if kind == "odd" else r_even)(k, P).value
                report.add_numeric(
                    f"r-{kind}-truncated/k={k}",
                    "k-fold weakly-nested prefix sum within its rigorous tail bound",
                    sv.value, closed, tol=sv.error_bound, fmt=fmt)
        for l in range(1, 6):
            report.add_numeric(
                f"zeta-even-closed/l={l}",
                "eta-based zeta(2l) matches (2 pi)^(2l)|B_2l|/(2 (2l)!)",
                zeta(2 * l, P), zeta_even_closed(2 * l, P),
                tol=mpf(10) ** (5 - P), fmt=fmt)
    return report


def _suite_gf(P: int) -> VerificationReport:
    report = VerificationReport("gf")
    report.extend(cfn.check_generating_functions(4, 31), prefix="coefficients")
    report.extend(binomial_gf_identities(P), prefix="samples")
    return report


def _suite_routes(P: int, N: int, tol=None) -> VerificationReport:
    report = VerificationReport("routes", config={"digits": P, "N": N})
    fmt = _fmt(P)
    with mp.workdps(P + GUARD_DIGITS):
        tol_q = default_tolerance(P) if tol is None else mpf(tol)
        report.config["tol"] = mp.nstr(tol_q, 5)
        for m in range(1, 9):
            ref = c_eta_route(m, P).value
            report.add_numeric(
                f"route-quadrature/m={m}",
                "tanh-sinh moment integral matches the eta closed form",
                moment_quadrature(m, P, tol), ref, tol=10 * tol_q, fmt=fmt)
        for m in range(1, 7):
            ref = c_eta_route(m, P).value
            mv = c_cfn_route(m, P, N)
            report.add_numeric(
                f"route-cfn/m={m}",
                "central-binomial series within its own tail bound of the closed form",
                mv.value, ref, tol=mv.error_bound, fmt=fmt)
            mv = c_nested_route(m, P, N)
            report.add_numeric(
                f"route-nested/m={m}",
                "nested S-series combination within its propagated tail bound",
                mv.value, ref, tol=mv.error_bound, fmt=fmt)
        tol10 = mpf(10) ** (-(P - 10))
        for z in ("0.25", "0.5", "0.75"):
            report.add_numeric(
                f"kernel-k1/z={z}",
                "K1 power series matches (1/z) int_0^z asin(y)/y dy",
                kernel_k1(z, P, method="series"),
                kernel_k1(z, P, method="integral"), tol=tol10, fmt=fmt)
            report.add_numeric(
                f"kernel-k0/z={z}",
                "K0 power series matches int_0^z asin^2(sqrt y)/y dy",
                kernel_k0(z, P, method="series"),
                kernel_k0(z, P, method="integral"), tol=tol10, fmt=fmt)
        lg2 = eta(1, P + 5)
        report.add_numeric(
            "kernel-k1/z=1",
            "K1(1) = (pi/2) log 2 (the S_odd(0) series)",
            kernel_k1(1, P), mp.pi / 2 * lg2, tol=tol10, fmt=fmt)
        report.add_numeric(
            "kernel-k0/z=1",
            "K0(1) equals the second moment C(2)",
            kernel_k0(1, P), c_eta_route(2, P).value, tol=tol10, fmt=fmt)
    return report


def run_suite(name: str, P: int = 50, N: int = _DEFAULT_N,
              tol=None) -> VerificationReport:
    """Build and run one named verification suite; 'all' folds every suite
    into a single report (check ids are globally unique by construction)."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; pick from {SUITES}")
    _require_digits(P)
    if name == "tables":
        return _suite_tables()
    if name == "closed-forms":
        return _suite_closed_forms(P)
    if name == "consequences":
        return verify_consequences(P, N, tol)
    if name == "gf":
        return _suite_gf(P)
    if name == "routes":
        return _suite_routes(P, N, tol)
    if name == "h-reduction":
        return verify_h_integral_reduction(2, 10, N, P)
    report = VerificationReport("all", config={"digits": P, "N": N})
    for sub in ("tables", "closed-forms", "consequences", "gf", "routes",
                "h-reduction"):
        report.extend(run_suite(sub, P, N, tol), prefix=sub)
    return report
