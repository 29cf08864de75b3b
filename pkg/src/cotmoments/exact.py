"""Exact integer/rational building blocks: combinatorial numbers, integer
partitions, and truncated formal power series over the rationals.

Everything in this module is exact — no floating point anywhere. `BigRational`
is `fractions.Fraction`, which already guarantees lowest-terms reduction and a
positive denominator.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

__all__ = [
    "BigRational",
    "Partition",
    "RationalPowerSeries",
    "binomial",
    "bernoulli",
    "euler_zigzag",
    "partitions",
    "cycle_count",
    "double_factorial_odd",
    "fps_arcsin",
    "fps_power",
]

BigRational = Fraction

Fr = Fraction  # local binding, used heavily below


# ---------------------------------------------------------------------------
# combinatorial numbers
# ---------------------------------------------------------------------------

def binomial(n: int, k: int) -> Fraction:
    """Exact binomial coefficient C(n, k); 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return Fr(0)
    return Fr(math.comb(n, k))


_bernoulli_cache: List[Fraction] = [Fr(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (convention B_1 = -1/2), by the defining recurrence.

    sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, i.e.

        B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j.

    Values are cached in a growable table; only exact rationals are used.
    """
    if n < 0:
        raise ValueError(f"bernoulli: n must be non-negative, got {n}")
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            acc = Fr(0)
            for j in range(m):
                acc += math.comb(m + 1, j) * _bernoulli_cache[j]
            _bernoulli_cache.append(-acc / (m + 1))
        return _bernoulli_cache[n]


_zigzag_rows: List[List[int]] = [[1]]
_zigzag_lock = threading.Lock()


def _zigzag_number(n: int) -> int:
    # Boustrophedon (Seidel) triangle: row[0] = 0 (n >= 1) and
    # row[k] = row[k-1] + prev[n-k]; the last entry of row n is the n-th
    # zigzag number (1, 1, 1, 2, 5, 16, 61, ...).
    with _zigzag_lock:
        while len(_zigzag_rows) <= n:
            prev = _zigzag_rows[-1]
            m = len(prev)
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                row[k] = row[k - 1] + prev[m - k]
            _zigzag_rows.append(row)
        return _zigzag_rows[n][-1]


def euler_zigzag(n: int) -> Fraction:
    """Euler (secant) number E*_n = n! * [z^n] sec(z) for even n.

    Computed through the boustrophedon triangle in exact integers.  Odd n is
    rejected: the odd-index zigzag numbers are tangent numbers, which none of
    the identities here consume.
    """
    if n < 0 or n % 2:
        raise ValueError(f"euler_zigzag: n must be even and non-negative, got {n}")
    return Fr(_zigzag_number(n))


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = 1*3*5*...*(2n-1), with the empty-product value 1 at n = 0."""
    if n < 0:
        raise ValueError(f"double_factorial_odd: n must be non-negative, got {n}")
    out = 1
    for i in range(1, 2 * n, 2):
        out *= i
    return out


# ---------------------------------------------------------------------------
# integer partitions and cycle counts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """A partition of an integer k, stored as a multiplicity vector.

    ``multiplicities[l-1]`` is the number of parts equal to l, so the
    partitioned integer is sum(l * pi_l) and the length is sum(pi_l).
    """

    multiplicities: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(m < 0 for m in self.multiplicities):
            raise ValueError("Partition: multiplicities must be non-negative")
        if self.multiplicities and self.multiplicities[-1] == 0:
            raise ValueError("Partition: trailing zero multiplicities not allowed")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        if any(p < 1 for p in parts):
            raise ValueError("Partition: parts must be positive")
        mult = [0] * (max(parts) if parts else 0)
        for p in parts:
            mult[p - 1] += 1
        return cls(tuple(mult))

    @property
    def total(self) -> int:
        """The partitioned integer k = sum(l * pi_l)."""
        return sum(l * m for l, m in enumerate(self.multiplicities, start=1))

    @property
    def length(self) -> int:
        """Number of parts."""
        return sum(self.multiplicities)

    def parts(self) -> Tuple[int, ...]:
        """Parts in decreasing order, e.g. (2, 1, 1)."""
        out: List[int] = []
        for l in range(len(self.multiplicities), 0, -1):
            out.extend([l] * self.multiplicities[l - 1])
        return tuple(out)


def _descending_parts(remaining: int, maxpart: int) -> Iterator[List[int]]:
    if remaining == 0:
        yield []
        return
    for p in range(min(maxpart, remaining), 0, -1):
        for rest in _descending_parts(remaining - p, p):
            yield [p] + rest


def partitions(k: int) -> List[Partition]:
    """All partitions of k, in decreasing-part lexicographic order.

    For k = 4: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
    """
    if k < 1:
        raise ValueError(f"partitions: k must be positive, got {k}")
    return [Partition.from_parts(parts) for parts in _descending_parts(k, k)]


def cycle_count(p: Partition) -> Fraction:
    """Number of permutations of S_k with cycle type p.

    a(pi) = k! / prod_l (pi_l! * l^pi_l).  Always an exact positive integer
    (returned as a Fraction with denominator 1).
    """
    k = p.total
    denom = 1
    for l, m in enumerate(p.multiplicities, start=1):
        denom *= math.factorial(m) * l**m
    return Fr(math.factorial(k), denom)


# ---------------------------------------------------------------------------
# formal power series over the rationals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalPowerSeries:
    """Truncated power series with exact rational coefficients.

    ``coefficients[i]`` is the coefficient of z^i, for 0 <= i <= order.
    Arithmetic is exact through the truncation order.
    """

    coefficients: Tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("RationalPowerSeries: order must be non-negative")
        if len(self.coefficients) != self.order + 1:
            raise ValueError("RationalPowerSeries: need exactly order+1 coefficients")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Fraction | int], order: int | None = None) -> "RationalPowerSeries":
        cs = [Fr(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if len(cs) < order + 1:
            cs.extend([Fr(0)] * (order + 1 - len(cs)))
        return cls(tuple(cs[: order + 1]), order)

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of z^i (0 beyond the truncation order)."""
        if i < 0:
            raise ValueError("coefficient index must be non-negative")
        return self.coefficients[i] if i <= self.order else Fr(0)

    def __add__(self, other: "RationalPowerSeries") -> "RationalPowerSeries":
        order = min(self.order, other.order)
        return RationalPowerSeries(
            tuple(self.coefficients[i] + other.coefficients[i] for i in range(order + 1)),
            order,
        )

    def __mul__(self, other: "RationalPowerSeries") -> "RationalPowerSeries":
        order = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = [Fr(0)] * (order + 1)
        for i, ai in enumerate(a[: order + 1]):
            if not ai:
                continue
            for j in range(order + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return RationalPowerSeries(tuple(out), order)

    def reciprocal(self) -> "RationalPowerSeries":
        """Multiplicative inverse 1/S through the truncation order.

        Requires a nonzero constant term.
        """
        c0 = self.coefficients[0]
        if not c0:
            raise ValueError("reciprocal: constant term must be nonzero")
        inv0 = 1 / c0
        out = [inv0] + [Fr(0)] * self.order
        for n in range(1, self.order + 1):
            acc = Fr(0)
            for i in range(1, n + 1):
                ci = self.coefficients[i]
                if ci:
                    acc += ci * out[n - i]
            out[n] = -inv0 * acc
        return RationalPowerSeries(tuple(out), self.order)


def fps_arcsin(order: int) -> RationalPowerSeries:
    """Series of 2*arcsin(z/2) truncated at `order`.

    The coefficient of z^(2n+1) is C(2n, n) / (16^n * (2n+1)); even-index
    coefficients vanish.
    """
    if order < 1:
        raise ValueError(f"fps_arcsin: order must be >= 1, got {order}")
    coeffs = [Fr(0)] * (order + 1)
    n = 0
    while 2 * n + 1 <= order:
        coeffs[2 * n + 1] = Fr(math.comb(2 * n, n), 16**n * (2 * n + 1))
        n += 1
    return RationalPowerSeries(tuple(coeffs), order)


def fps_power(s: RationalPowerSeries, m: int) -> RationalPowerSeries:
    """Exact m-th power of a truncated series (binary exponentiation)."""
    if m < 1:
        raise ValueError(f"fps_power: m must be positive, got {m}")
    result: RationalPowerSeries | None = None
    base = s
    e = m
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    assert result is not None
    return result
