"""Doubly-exponential (tanh-sinh) quadrature with exact endpoint offsets.

The substitution x = c + r*tanh((pi/2)*sinh t) clusters nodes doubly
exponentially at both endpoints, which makes the rule spectrally accurate
for integrands with endpoint singularities of algebraic-logarithmic type —
exactly what the cotangent moments and their consequence identities need.

Integrands are called as ``f(x, da, db)`` where ``da`` and ``db`` are the
distances to the left and right endpoints.  These are computed *exactly*
(node offsets are generated as 1 - tanh(u) = 2e/(1+e) with e = exp(-2u),
never by subtracting x from the endpoint), so an integrand with a singular
factor at an endpoint can evaluate it stably, e.g. ``tan(db/2)`` for
cot(x/2) on [0, pi], or ``mp.log(da)`` for log(x) at 0.

Levels halve the mesh in t; level L contributes the odd multiples of
2^-L.  The trapezoidal sums S_L then satisfy S_L = S_{L-1}/2 + h*(new),
and successive gaps |S_L - S_{L-1}| shrink roughly quadratically in the
exponent once the rule resolves the integrand.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from mpmath import mp, mpf

from .hpreal import MIN_DIGITS, _require_digits

__all__ = [
    "Integrand1D",
    "QuadratureResult",
    "QuadratureError",
    "integrate_1d",
    "integrate_2d_iterated",
    "moment_quadrature",
    "default_tolerance",
]

# extra working digits on top of the requested P
_WORK_GUARD = 15
# refinement levels are capped; hitting the cap raises QuadratureError
_DEFAULT_LEVEL_CAP = 12

IntegrandFn = Callable[..., mpf]


@dataclass(frozen=True)
class Integrand1D:
    """A 1-D integrand together with its declared endpoint behavior.

    ``fn(x, da, db)`` receives the evaluation point and its exact distances
    to the two endpoints.  ``singular_left``/``singular_right`` document
    whether fn blows up (or loses digits) at an endpoint; they are metadata
    for callers assembling reports and do not change the rule itself.
    """

    fn: IntegrandFn
    singular_left: bool = False
    singular_right: bool = False
    label: str = ""


@dataclass(frozen=True)
class QuadratureResult:
    value: mpf
    error_estimate: mpf
    levels: int
    evaluations: int
    deltas: Tuple[mpf, ...] = field(default_factory=tuple)


class QuadratureError(Exception):
    """Raised when the level cap is reached before the tolerance is met."""

    def __init__(self, message: str, best: Optional[mpf] = None,
                 gap: Optional[mpf] = None, levels: int = 0):
        super().__init__(message)
        self.best = best
        self.gap = gap
        self.levels = levels


def default_tolerance(P: int) -> mpf:
    """The package-wide default target accuracy for P digits: 10^-(P-10)."""
    return mpf(10) ** (-(P - 10))


# ---------------------------------------------------------------------------
# node tables
#
# Cached per (working dps, truncation range).  Entry [L] is the list of
# (offset, weight) pairs new at level L, offset = 1 - tanh((pi/2) sinh t).
# ---------------------------------------------------------------------------

_NODE_CACHE: Dict[Tuple[int, int], List[List[Tuple[mpf, mpf]]]] = {}
_NODE_LOCK = threading.Lock()


def _node_pair(t: mpf) -> Tuple[mpf, mpf]:
    u = mp.pi / 2 * mp.sinh(t)
    e = mp.exp(-2 * u)
    offset = 2 * e / (1 + e)
    weight = (mp.pi / 2) * mp.cosh(t) / mp.cosh(u) ** 2
    return offset, weight


def _build_level(level: int, tmax: mpf) -> List[Tuple[mpf, mpf]]:
    pairs: List[Tuple[mpf, mpf]] = []
    if level == 0:
        # integer abscissas, starting at the center node t = 0 where the
        # offset is exactly 1 (x is the midpoint)
        pairs.append((mpf(1), mp.pi / 2))
        t = mpf(1)
        while t <= tmax:
            pairs.append(_node_pair(t))
            t += 1
    else:
        h = mpf(2) ** (-level)
        t = h
        while t <= tmax:
            pairs.append(_node_pair(t))
            t += 2 * h
    return pairs


def _node_levels(dps: int, tmax_q4: int, upto: int) -> List[List[Tuple[mpf, mpf]]]:
    key = (dps, tmax_q4)
    with _NODE_LOCK:
        table = _NODE_CACHE.setdefault(key, [])
        if len(table) <= upto:
            with mp.workdps(dps):
                tmax = mpf(tmax_q4) / 4
                for level in range(len(table), upto + 1):
                    table.append(_build_level(level, tmax))
        return table


def _truncation_range(P: int, tol: mpf) -> int:
    """Quantized t-range (in quarter steps) so node offsets and weights decay
    below both the tolerance and the working precision."""
    eps = min(tol * mpf(10) ** -6, mpf(10) ** (-(P + 10)))
    log_term = float(mp.log(2 / eps))
    tmax = math.asinh(log_term / math.pi)
    return int(math.ceil(tmax * 4))


# ---------------------------------------------------------------------------
# the 1-D engine
# ---------------------------------------------------------------------------

def integrate_1d(f: Union[Integrand1D, IntegrandFn], a, b, P: int,
                 tol=None, level_cap: int = _DEFAULT_LEVEL_CAP) -> QuadratureResult:
    """Integrate f over [a, b] to absolute accuracy ~tol at P digits.

    f is either an Integrand1D or a bare callable ``f(x, da, db)``.
    Raises QuadratureError if level_cap refinements do not reach tol.
    """
    _require_digits(P)
    fn = f.fn if isinstance(f, Integrand1D) else f
    dps = P + _WORK_GUARD
    with mp.workdps(dps):
        a = mpf(a)
        b = mpf(b)
        tol = default_tolerance(P) if tol is None else mpf(tol)
        width = b - a
        r = width / 2
        tmax_q4 = _truncation_range(P, tol)
        # per-node contributions below this are treated as converged tail
        cutoff = tol * mpf(10) ** -4

        s = mpf(0)
        deltas: List[mpf] = []
        evaluations = 0
        for level in range(level_cap + 1):
            h = mpf(2) ** (-level)
            nodes = _node_levels(dps, tmax_q4, level)[level]
            part = mpf(0)
            tiny_run = 0
            for offset, weight in nodes:
                if offset == 1:
                    contrib = weight * fn(a + r, r, r)
                    evaluations += 1
                else:
                    off = r * offset
                    f_lo = fn(a + off, off, width - off)
                    f_hi = fn(b - off, width - off, off)
                    contrib = weight * (f_lo + f_hi)
                    evaluations += 2
                if not mp.isfinite(contrib):
                    raise QuadratureError(
                        f"integrand returned a non-finite value at level {level}"
                        " (endpoint distances are passed for a reason)",
                        best=r * s, levels=level)
                part += contrib
                if abs(contrib) * h * r < cutoff:
                    tiny_run += 1
                    if tiny_run >= 2:
                        break
                else:
                    tiny_run = 0
            s_new = (s / 2 + h * part) if level else part
            if level >= 1:
                deltas.append(abs(r * (s_new - s)))
            s = s_new
            if level >= 2 and deltas[-1] <= tol:
                # First-order estimate: the converged-tail cut leaves a
                # deficit comparable to the last refinement delta, so the
                # usual squared (Richardson) refinement would overstate the
                # accuracy; twice the last delta is what measurements support.
                est = +(2 * deltas[-1])
                return QuadratureResult(value=+(r * s), error_estimate=est,
                                        levels=level + 1,
                                        evaluations=evaluations,
                                        deltas=tuple(deltas))
        raise QuadratureError(
            f"no convergence to {mp.nstr(tol, 3)} within {level_cap} levels"
            f" (last gap {mp.nstr(deltas[-1], 3) if deltas else 'n/a'})",
            best=+(r * s), gap=deltas[-1] if deltas else None,
            levels=level_cap + 1)


def integrate_2d_iterated(f, P: int, tol=None,
                          level_cap: int = _DEFAULT_LEVEL_CAP) -> QuadratureResult:
    """Iterated tanh-sinh integral of f over the unit square.

    f is called as ``f(x0, da0, db0, x1, da1, db1)``; x0 is the inner
    variable.  The inner integral is pushed 50x below the outer tolerance so
    its truncation error does not pollute the outer convergence test.
    """
    _require_digits(P)
    with mp.workdps(P + _WORK_GUARD):
        tol = default_tolerance(P) if tol is None else mpf(tol)
        inner_tol = tol / 50
        inner_evaluations = 0

        def outer(x1, da1, db1):
            nonlocal inner_evaluations

            def inner(x0, da0, db0):
                return f(x0, da0, db0, x1, da1, db1)

            res = integrate_1d(inner, 0, 1, P, inner_tol, level_cap)
            inner_evaluations += res.evaluations
            return res.value

        res = integrate_1d(outer, 0, 1, P, tol, level_cap)
        return QuadratureResult(value=res.value,
                                error_estimate=res.error_estimate,
                                levels=res.levels,
                                evaluations=res.evaluations + inner_evaluations,
                                deltas=res.deltas)


# ---------------------------------------------------------------------------
# the moment integrals
# ---------------------------------------------------------------------------

def moment_quadrature(m: int, P: int, tol=None, form: str = "cot",
                      level_cap: int = _DEFAULT_LEVEL_CAP) -> mpf:
    """The m-th cotangent moment by direct quadrature.

    form="cot"     integral over [0, pi] of x^m/(2 m!) * cot(x/2); the
                   half-angle cotangent is evaluated as tan(db/2) from the
                   exact distance to the right endpoint.
    form="arcsin"  the same value after v = 2 sin(x/2): integral over [0, 2]
                   of (2 asin(v/2))^m / (m! v).  Near v = 2 the arcsine is
                   folded as pi - 4 asin(sqrt(db/4)) to keep full precision.

    The two forms share no nodes and no special-function code paths, so their
    agreement is a genuine end-to-end check of the engine.
    """
    if m < 1:
        raise ValueError(f"moment_quadrature: need m >= 1, got {m}")
    if form not in ("cot", "arcsin"):
        raise ValueError(f"moment_quadrature: unknown form {form!r}")
    _require_digits(P)
    with mp.workdps(P + _WORK_GUARD):
        fact = mp.factorial(m)
        if form == "cot":
            def f(x, da, db):
                return x ** m / (2 * fact) * mp.tan(db / 2)

            return integrate_1d(f, 0, mp.pi, P, tol, level_cap).value

        def g(v, da, db):
            if v <= 1:
                theta = 2 * mp.asin(v / 2)
            else:
                theta = mp.pi - 4 * mp.asin(mp.sqrt(db / 4))
            return theta ** m / (fact * v)

        return integrate_1d(g, 0, 2, P, tol, level_cap).value
