"""The R, A and S series families and the central-binomial kernels K0/K1.

Three layers live here:

* closed forms — r_odd/r_even (zigzag / Bernoulli), a1/a0 (pure pi powers),
  and the alternating recurrences tying A to R;
* truncated evaluations with explicit tail bounds — the weakly-nested
  prefix sums behind R (``r_truncated_nested``) and the kernel-weighted
  suffix sums S_odd/S_even used by the nested moment route;
* the kernels K1(z) and K0(z), each computable by power series and by
  integral, which must agree wherever both converge.

The S family is evaluated in fixed-point integer arithmetic: a value v is
carried as round(v * 2^fbits).  The inner suffix tails

    T_d(j) = sum_{j <= i_1 <= i_2 <= ... <= i_d} prod 1/(2 i + 1)^2   (odd)
    T_d(j) = sum_{j <= i_1 <= i_2 <= ... <= i_d} prod 1/i^2           (even)

satisfy T_d(j) = T_d(j+1) + w(j) * T_{d-1}(j), so one backward sweep over
j = N..0 updates all depths at once; the outer weights b(j) (central-binomial
ratios over (2j+1)^2 resp. 2j^3) are streamed backwards by their term ratio.
Each right-shift floors, losing < 2^-fbits, so the total fixed-point error is
below (lmax + 3) * (N + 1) * 2^-fbits — negligible against the series tails
for fbits >= 140.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from mpmath import mp, mpf

from .exact import bernoulli, cycle_count, euler_zigzag, partitions
from .hpreal import GUARD_DIGITS, _require_digits, eta, zeta
from .quadrature import default_tolerance, integrate_1d

__all__ = [
    "SeriesValue",
    "r_odd",
    "r_even",
    "r_via_partitions",
    "r_truncated_nested",
    "a1",
    "a0",
    "a1_via_recurrence",
    "a0_via_recurrence",
    "euler_binomial_vanishing",
    "s_odd",
    "s_even",
    "nested_tail_sums",
    "kernel_k1",
    "kernel_k0",
    "fixed_point_bits",
]

_KINDS = ("odd", "even")


@dataclass(frozen=True)
class SeriesValue:
    """A named series evaluation.

    family: one of R_odd, R_even, A0, A1, S_odd, S_even, K0, K1.
    method: closed-form | truncated-sum | quadrature.  Truncated sums carry
    an explicit tail bound in error_bound; closed forms carry None (rounding
    error only, a few ulps at the requested precision).
    """

    family: str
    index: object
    value: mpf
    method: str
    error_bound: Optional[mpf] = None


def _require_kind(kind: str) -> None:
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def r_odd(k: int, P: int) -> SeriesValue:
    """R_odd(k) = (pi/2)^(2k) * E*_2k / (2k)! with E* the even zigzag
    (secant) numbers: pi^2/8, 5 pi^4/384, 61 pi^6/46080, ..."""
    if k < 1:
        raise ValueError(f"r_odd: need k >= 1, got {k}")
    _require_digits(P)
    z = euler_zigzag(2 * k)
    with mp.workdps(P + GUARD_DIGITS):
        value = +((mp.pi / 2) ** (2 * k) * int(z) / mp.factorial(2 * k))
    return SeriesValue("R_odd", k, value, "closed-form")


def r_even(k: int, P: int) -> SeriesValue:
    """R_even(k) = 2 (2^(2k-1) - 1) |B_2k| pi^(2k) / (2k)!:
    pi^2/6, 7 pi^4/360, 31 pi^6/15120, ..."""
    if k < 1:
        raise ValueError(f"r_even: need k >= 1, got {k}")
    _require_digits(P)
    b = abs(bernoulli(2 * k))
    with mp.workdps(P + GUARD_DIGITS):
        scale = 2 * (2 ** (2 * k - 1) - 1)
        value = +(scale * mpf(b.numerator) * mp.pi ** (2 * k)
                  / (b.denominator * mp.factorial(2 * k)))
    return SeriesValue("R_even", k, value, "closed-form")


def r_via_partitions(k: int, kind: str, P: int) -> SeriesValue:
    """R(k) through the cycle-index expansion over partitions of k.

    R(k) = sum over partitions pi of k of  a(pi)/k! * prod_l p(2l)^(pi_l),
    where the power sums are p(2l) = (1 - 2^(-2l)) zeta(2l) for the odd
    family (odd reciprocal squares) and p(2l) = zeta(2l) for the even one.
    All coefficients are positive — no sign alternation enters here.
    """
    if k < 1:
        raise ValueError(f"r_via_partitions: need k >= 1, got {k}")
    _require_kind(kind)
    _require_digits(P)
    kfact = math.factorial(k)
    with mp.workdps(P + GUARD_DIGITS):
        power_sums = {}
        for l in range(1, k + 1):
            zl = zeta(2 * l, P + 5)
            if kind == "odd":
                zl = (1 - mpf(2) ** (-2 * l)) * zl
            power_sums[l] = zl
        acc = mpf(0)
        for p in partitions(k):
            coeff = cycle_count(p) / kfact  # exact rational 1/prod(m_l! l^m_l)
            term = mpf(coeff.numerator) / coeff.denominator
            for l, m_l in enumerate(p.multiplicities, start=1):
                if m_l:
                    term *= power_sums[l] ** m_l
            acc += term
        value = +acc
    family = "R_odd" if kind == "odd" else "R_even"
    return SeriesValue(family, k, value, "closed-form")


def a1(k: int, P: int) -> SeriesValue:
    """A1(k) = (pi/2)^(2k) / (2k)!, with A1(0) = 1."""
    if k < 0:
        raise ValueError(f"a1: need k >= 0, got {k}")
    _require_digits(P)
    with mp.workdps(P + GUARD_DIGITS):
        value = +((mp.pi / 2) ** (2 * k) / mp.factorial(2 * k))
    return SeriesValue("A1", k, value, "closed-form")


def a0(k: int, P: int) -> SeriesValue:
    """A0(k) = pi^(2k) / (2k+1)!, with A0(0) = 1."""
    if k < 0:
        raise ValueError(f"a0: need k >= 0, got {k}")
    _require_digits(P)
    with mp.workdps(P + GUARD_DIGITS):
        value = +(mp.pi ** (2 * k) / mp.factorial(2 * k + 1))
    return SeriesValue("A0", k, value, "closed-form")


def _a_recurrence(k: int, P: int, r_closed, family: str) -> SeriesValue:
    if k < 0:
        raise ValueError(f"a-recurrence: need k >= 0, got {k}")
    _require_digits(P)
    with mp.workdps(P + GUARD_DIGITS):
        rs = [None] + [r_closed(l, P + 5).value for l in range(1, k + 1)]
        a_vals = [mpf(1)]
        for j in range(1, k + 1):
            acc = mpf(0)
            for l in range(1, j + 1):
                acc += (-1) ** (l + 1) * rs[l] * a_vals[j - l]
            a_vals.append(acc)
        value = +a_vals[k]
    return SeriesValue(family, k, value, "closed-form")


def a1_via_recurrence(k: int, P: int) -> SeriesValue:
    """A1(k) rebuilt from A1(k) = sum_{l=1..k} (-1)^(l+1) R_odd(l) A1(k-l)."""
    return _a_recurrence(k, P, r_odd, "A1")


def a0_via_recurrence(k: int, P: int) -> SeriesValue:
    """A0(k) rebuilt from the same alternating recurrence with R_even."""
    return _a_recurrence(k, P, r_even, "A0")


def euler_binomial_vanishing(k: int) -> int:
    """The exact integer sum_{l=0..k} (-1)^(l+1) C(2k, 2l) E*_2l.

    Vanishes identically for every k >= 1 (the sec * cos = 1 convolution);
    callers assert the return value is 0.
    """
    if k < 1:
        raise ValueError(f"euler_binomial_vanishing: need k >= 1, got {k}")
    acc = 0
    for l in range(k + 1):
        acc += (-1) ** (l + 1) * math.comb(2 * k, 2 * l) * int(euler_zigzag(2 * l))
    return acc


# ---------------------------------------------------------------------------
# truncated weakly-nested prefix sums for R, with rigorous tail bounds
# ---------------------------------------------------------------------------

def r_truncated_nested(k: int, kind: str, P: int, N: int = 10000) -> SeriesValue:
    """R(k) as the direct k-fold weakly-increasing nested sum, truncated at N.

    The prefix values V_d(N) are accumulated in one sweep (V_d += w_i V_{d-1}
    with V_{d-1} already updated at i, which realizes i_1 <= ... <= i_d).
    The error bound is rigorous: with w_tail >= sum_{i>N} w_i and
    U_0 = 1, U_d = V_d(N) + U_{d-1} w_tail, the truncation error of V_k is
    at most U_{k-1} * w_tail (every dropped tuple has its largest index > N,
    and the remaining d-1 indices are bounded by the full sum U_{d-1}).
    """
    if k < 1:
        raise ValueError(f"r_truncated_nested: need k >= 1, got {k}")
    _require_kind(kind)
    if N < 1:
        raise ValueError(f"r_truncated_nested: need N >= 1, got {N}")
    _require_digits(P)
    with mp.workdps(P + GUARD_DIGITS):
        V = [mpf(1)] + [mpf(0)] * k
        if kind == "odd":
            w_tail = mpf(1) / (4 * N)  # sum_{i>N} (2i+1)^-2 < 1/(4N+2)
            indices = range(0, N + 1)
        else:
            w_tail = mpf(1) / N        # sum_{i>N} i^-2 < 1/N
            indices = range(1, N + 1)
        for i in indices:
            w = mpf(1) / ((2 * i + 1) ** 2 if kind == "odd" else i * i)
            for d in range(1, k + 1):
                V[d] += w * V[d - 1]
        U = mpf(1)
        for d in range(1, k):
            U = V[d] + U * w_tail
        bound = +(U * w_tail)
        value = +V[k]
    family = "R_odd" if kind == "odd" else "R_even"
    return SeriesValue(family, k, value, "truncated-sum", error_bound=bound)


# ---------------------------------------------------------------------------
# the S families: fixed-point suffix DP shared across depths
# ---------------------------------------------------------------------------

_TAIL_RECORD_MAX = 24  # suffix tails T_d(j) are kept for j up to here


def fixed_point_bits(P: int) -> int:
    """Fractional bits for the integer fixed-point sweeps at P digits."""
    return max(140, int(P * 3.322) + 40)


@dataclass
class _FamilyData:
    kind: str
    lmax: int
    N: int
    fbits: int
    weighted_sums: List[int]            # S_l * 2^fbits for l = 0..lmax
    tails: Dict[int, List[int]]         # j -> [T_0(j)..T_lmax(j)] * 2^fbits
    b_last: int                         # b(N) * 2^fbits


_family_cache: Dict[Tuple[str, int, int], _FamilyData] = {}
_family_lock = threading.Lock()


def _sweep_family(kind: str, lmax: int, N: int, fbits: int) -> _FamilyData:
    one = 1 << fbits
    t = [one] + [0] * lmax
    sums = [0] * (lmax + 1)
    tails: Dict[int, List[int]] = {}
    b_last = 0
    if kind == "odd":
        # outer weight b(j) = binom(2j,j) 4^-j / (2j+1)^2, streamed backwards
        ratio = one
        for i in range(1, N + 1):
            ratio = ratio * (2 * i - 1) // (2 * i)
        for j in range(N, -1, -1):
            q = (2 * j + 1) ** 2
            w = one // q
            for d in range(1, lmax + 1):
                t[d] += (t[d - 1] * w) >> fbits
            bj = ratio // q
            for d in range(lmax + 1):
                sums[d] += (bj * t[d]) >> fbits
            if j == N:
                b_last = bj
            if j <= _TAIL_RECORD_MAX:
                tails[j] = list(t)
            if j:
                ratio = ratio * (2 * j) // (2 * j - 1)
    else:
        # outer weight b(j) = 4^j / (binom(2j,j) * 2 j^3), streamed backwards
        ratio = one
        for i in range(1, N + 1):
            ratio = ratio * (2 * i) // (2 * i - 1)
        for j in range(N, 0, -1):
            w = one // (j * j)
            for d in range(1, lmax + 1):
                t[d] += (t[d - 1] * w) >> fbits
            bj = ratio // (2 * j ** 3)
            for d in range(lmax + 1):
                sums[d] += (bj * t[d]) >> fbits
            if j == N:
                b_last = bj
            if j <= _TAIL_RECORD_MAX:
                tails[j] = list(t)
            ratio = ratio * (2 * j - 1) // (2 * j)
    return _FamilyData(kind=kind, lmax=lmax, N=N, fbits=fbits,
                       weighted_sums=sums, tails=tails, b_last=b_last)


def _nested_family(kind: str, lmax: int, N: int, fbits: int) -> _FamilyData:
    key = (kind, N, fbits)
    with _family_lock:
        data = _family_cache.get(key)
        if data is None or data.lmax < lmax:
            data = _sweep_family(kind, lmax, N, fbits)
            _family_cache[key] = data
        return data


def _s_value(kind: str, l: int, P: int, N: int) -> Tuple[mpf, mpf]:
    """(value, tail bound) for S_kind(l) truncated at N, at P digits."""
    fbits = fixed_point_bits(P)
    data = _nested_family(kind, l, N, fbits)
    with mp.workdps(P + GUARD_DIGITS):
        scale = mpf(2) ** fbits
        value = +(mpf(data.weighted_sums[l]) / scale)
        b_sum = mpf(data.weighted_sums[0]) / scale        # sum of b(j), j <= N
        b_last = mpf(data.b_last) / scale
        if kind == "odd":
            inner_full = mp.pi ** 2 / 8                   # T_1(0), largest tail
            w_tail = mpf(1) / (4 * N)
        else:
            inner_full = mp.pi ** 2 / 6                   # T_1(1) = zeta(2)
            w_tail = mpf(1) / N
        # truncation of each inner tail: l slots, each missing <= w_tail of
        # an inner sum bounded by inner_full, weighted by sum of b
        inner_err = b_sum * l * inner_full ** (l - 1) * w_tail if l else mpf(0)
        # dropped outer terms: b(j) ~ j^(-5/2), so sum_{j>N} b <= (2/3) N b(N)
        # (integral comparison; the 1.05 safety factor absorbs the calibrated
        # prefactor drift — heuristic, checked against closed forms in tests)
        outer_err = mpf("1.05") * (mpf(2) / 3) * N * b_last * inner_full ** l
        fp_err = (l + 3) * (N + 1) * mpf(2) ** (-fbits)
        bound = +(inner_err + outer_err + fp_err)
    return value, bound


def s_odd(l: int, P: int, N: int = 100000) -> SeriesValue:
    """S_odd(l): central-binomial outer weights against the l-fold suffix
    tails of 1/(2i+1)^2.  S_odd(0) is the K1(1) series (= pi/2 log 2)."""
    if l < 0:
        raise ValueError(f"s_odd: need l >= 0, got {l}")
    if N < 1:
        raise ValueError(f"s_odd: need N >= 1, got {N}")
    _require_digits(P)
    value, bound = _s_value("odd", l, P, N)
    return SeriesValue("S_odd", l, value, "truncated-sum", error_bound=bound)


def s_even(l: int, P: int, N: int = 100000) -> SeriesValue:
    """S_even(l): inverse-central-binomial outer weights against the l-fold
    suffix tails of 1/i^2.  S_even(0) equals the second cotangent moment."""
    if l < 0:
        raise ValueError(f"s_even: need l >= 0, got {l}")
    if N < 1:
        raise ValueError(f"s_even: need N >= 1, got {N}")
    _require_digits(P)
    value, bound = _s_value("even", l, P, N)
    return SeriesValue("S_even", l, value, "truncated-sum", error_bound=bound)


def nested_tail_sums(kind: str, dmax: int, jmax: int, N: int, P: int):
    """Suffix tails T_d(j) for d <= dmax, j <= jmax, truncated at N.

    Returns (table, bounds): table[j][d] is the truncated T_d(j) as an mpf
    (j starts at 0 for the odd family, 1 for the even one), and bounds[d] is
    a rigorous truncation bound valid for every j: d * U^(d-1) * w_tail with
    U the full inner sum and w_tail the dropped single-index tail.
    """
    _require_kind(kind)
    if dmax < 0 or jmax < 0:
        raise ValueError("nested_tail_sums: need dmax, jmax >= 0")
    if jmax > _TAIL_RECORD_MAX:
        raise ValueError(f"nested_tail_sums: jmax <= {_TAIL_RECORD_MAX}, got {jmax}")
    if N <= jmax:
        raise ValueError(f"nested_tail_sums: need N > jmax, got N={N}")
    _require_digits(P)
    fbits = fixed_point_bits(P)
    data = _nested_family(kind, dmax, N, fbits)
    j_lo = 0 if kind == "odd" else 1
    with mp.workdps(P + GUARD_DIGITS):
        scale = mpf(2) ** fbits
        table = {j: [+(mpf(v) / scale) for v in data.tails[j][: dmax + 1]]
                 for j in range(j_lo, jmax + 1)}
        if kind == "odd":
            inner_full = mp.pi ** 2 / 8
            w_tail = mpf(1) / (4 * N)
        else:
            inner_full = mp.pi ** 2 / 6
            w_tail = mpf(1) / N
        fp_err = (dmax + 2) * (N + 1) * mpf(2) ** (-fbits)
        bounds = [+(d * inner_full ** max(d - 1, 0) * w_tail + fp_err)
                  for d in range(dmax + 1)]
    return table, bounds


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------

_SERIES_Z_MAX = 0.9  # beyond this the power series converge too slowly


def _kernel_series_k1(z: mpf, P: int) -> mpf:
    target = mpf(10) ** (-(P + 5))
    zz = z * z
    term = mpf(1)         # j = 0: C(0,0) (z/2)^0 / 1
    acc = mpf(1)
    j = 0
    while True:
        j += 1
        term *= zz * (2 * j - 1) / (2 * j)
        contrib = term / (2 * j + 1) ** 2
        acc += contrib
        if contrib < target * (1 - zz):
            return acc


def _kernel_series_k0(z: mpf, P: int) -> mpf:
    target = mpf(10) ** (-(P + 5))
    term = +z             # j = 1: (1/2) * 4z / C(2,1), before the 1/j^3
    acc = +z              # j = 1 contribution
    j = 1
    while True:
        j += 1
        term *= z * (2 * j) / (2 * j - 1)
        contrib = term / j ** 3
        acc += contrib
        if contrib < target * (1 - z):
            return acc


def _kernel_integral_k1(z: mpf, P: int) -> mpf:
    one_minus_z = 1 - z

    def f(y, da, db):
        u = db + one_minus_z  # 1 - y, exactly
        if u < mpf("0.3"):
            val = mp.pi / 2 - 2 * mp.asin(mp.sqrt(u / 2))
        else:
            val = mp.asin(y)
        return val / y

    return integrate_1d(f, 0, z, P).value / z


def _kernel_integral_k0(z: mpf, P: int) -> mpf:
    one_minus_z = 1 - z

    def f(y, da, db):
        u = db + one_minus_z  # 1 - y, exactly
        if u < mpf("0.3"):
            s = mp.pi / 2 - mp.asin(mp.sqrt(u))
        else:
            s = mp.asin(mp.sqrt(y))
        return s * s / y

    return integrate_1d(f, 0, z, P).value


def _kernel(z, P: int, method: str, series_fn, integral_fn, at_zero: mpf) -> mpf:
    _require_digits(P)
    if method not in ("auto", "series", "integral"):
        raise ValueError(f"kernel: unknown method {method!r}")
    with mp.workdps(P + GUARD_DIGITS):
        z = mpf(z)
        if not 0 <= z <= 1:
            raise ValueError(f"kernel: need 0 <= z <= 1, got {mp.nstr(z, 8)}")
        if z == 0:
            return +at_zero
        if method == "auto":
            method = "series" if z <= mpf("0.75") else "integral"
        if method == "series":
            if z > mpf(_SERIES_Z_MAX):
                raise ValueError(
                    f"kernel series: need z <= {_SERIES_Z_MAX} (got {mp.nstr(z, 8)});"
                    " use the integral method near 1")
            return +series_fn(z, P)
        return +integral_fn(z, P)


def kernel_k1(z, P: int, method: str = "auto") -> mpf:
    """K1(z) = sum_j C(2j,j) (z/2)^(2j) / (2j+1)^2  =  (1/z) int_0^z asin(y)/y dy.

    K1(0) = 1, K1(1) = (pi/2) log 2.  Series for z <= 0.75, integral near 1.
    """
    return _kernel(z, P, method, _kernel_series_k1, _kernel_integral_k1, mpf(1))


def kernel_k0(z, P: int, method: str = "auto") -> mpf:
    """K0(z) = (1/2) sum_{j>=1} (4z)^j / (j^3 C(2j,j))  =  int_0^z asin^2(sqrt y)/y dy.

    K0(0) = 0; K0(1) equals the second cotangent moment.
    """
    return _kernel(z, P, method, _kernel_series_k0, _kernel_integral_k0, mpf(0))
