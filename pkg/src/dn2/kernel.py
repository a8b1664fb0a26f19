"""Numeric foundations: tanh-sinh quadrature, safeguarded root-finding, series summation.

Everything here works in plain double precision and is a pure function of its
inputs; any non-finite intermediate aborts with an explicit error instead of
letting NaNs propagate into results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable


class DomainError(ValueError):
    """Argument lies outside an operation's supported domain."""


class ConvergenceError(ArithmeticError):
    """An iterative scheme failed to meet its tolerance.

    ``best`` carries the most accurate estimate available at the point of
    failure, when one exists.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    evaluations: int


# |t| beyond which the tanh-sinh weight underflows double precision
_T_CUTOFF = 6.115


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    singular_left: bool = False,
    singular_right: bool = False,
    tol: float = 1e-12,
    max_level: int = 11,
) -> QuadResult:
    """Tanh-sinh (double-exponential) quadrature of ``f`` over ``(a, b)``.

    Integrable inverse-square-root endpoint singularities are absorbed by the
    transformation; flag them so that nodes which round onto a singular
    endpoint can be discarded instead of aborting the computation.
    """
    if not (a < b):
        raise DomainError(f"integrate requires a < b, got a={a}, b={b}")
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    span_eps = 8.0 * math.ulp(max(abs(a), abs(b), 1.0))

    def node_sum(ts) -> tuple[float, int]:
        acc = 0.0
        used = 0
        for t in ts:
            u = 0.5 * math.pi * math.sinh(t)
            # distance from the nearer endpoint, computed without cancellation
            # so that endpoint singularities see an accurate abscissa
            e = math.exp(-2.0 * abs(u))
            dist = 2.0 * half * e / (1.0 + e)
            x = (a + dist) if t < 0.0 else (b - dist) if t > 0.0 else mid
            if x <= a or x >= b:
                # node rounded onto an endpoint; its true weight is far below
                # double resolution
                continue
            w = half * 0.5 * math.pi * math.cosh(t) / math.cosh(u) ** 2
            if w == 0.0:
                continue
            fx = f(x)
            used += 1
            if not math.isfinite(fx):
                near_left = singular_left and (x - a) <= span_eps
                near_right = singular_right and (b - x) <= span_eps
                if near_left or near_right:
                    continue
                raise ConvergenceError(f"non-finite integrand value at x={x}")
            acc += w * fx
        return acc, used

    h = 1.0
    n0 = int(_T_CUTOFF / h)
    acc, used = node_sum(k * h for k in range(-n0, n0 + 1))
    evaluations = used
    total = h * acc
    prev = total
    delta = math.inf
    for level in range(1, max_level + 1):
        h *= 0.5
        nmax = int(_T_CUTOFF / h)
        start = nmax if nmax % 2 == 1 else nmax - 1
        acc, used = node_sum(k * h for k in range(-start, nmax + 1, 2))
        evaluations += used
        total = 0.5 * prev + h * acc
        delta = abs(total - prev)
        if level >= 2 and delta <= max(tol, 1e-15 * abs(total)):
            return QuadResult(total, delta, evaluations)
        prev = total
    raise ConvergenceError(
        f"quadrature did not converge to tol={tol} within {max_level} levels",
        best=QuadResult(total, delta, evaluations),
    )


def newton_invert(
    f: Callable[[float], float],
    fprime: Callable[[float], float],
    target: float,
    x0: float,
    tol: float = 1e-12,
    max_iter: int = 60,
) -> float:
    """Solve f(x) = target for monotone f, starting from x0.

    Newton steps are taken only while they stay inside the current bracket;
    otherwise the step falls back to bisection, so convergence is guaranteed
    once a sign change has been found.
    """
    gx = f(x0) - target
    if not math.isfinite(gx):
        raise ConvergenceError(f"non-finite function value at x0={x0}")
    if abs(gx) <= tol:
        return x0
    slope = fprime(x0)
    if not math.isfinite(slope) or slope == 0.0:
        slope = 1.0
    direction = -1.0 if (gx > 0.0) == (slope > 0.0) else 1.0

    step = 0.5 * max(1.0, abs(x0))
    prev_x, prev_g = x0, gx
    bracket = None
    for _ in range(80):
        x1 = x0 + direction * step
        g1 = f(x1) - target
        if not math.isfinite(g1):
            raise ConvergenceError(f"non-finite function value at x={x1}")
        if abs(g1) <= tol:
            return x1
        if (g1 > 0.0) != (prev_g > 0.0):
            bracket = (prev_x, prev_g, x1, g1)
            break
        prev_x, prev_g = x1, g1
        step *= 2.0
    if bracket is None:
        raise ConvergenceError("could not bracket the target value")

    xa, ga, xb, _gb = bracket
    lo, hi = (xa, xb) if xa < xb else (xb, xa)
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        gx = f(x) - target
        if not math.isfinite(gx):
            raise ConvergenceError(f"non-finite function value at x={x}")
        if abs(gx) <= tol:
            return x
        if (gx > 0.0) == (ga > 0.0):
            xa, ga = x, gx
        else:
            xb = x
        lo, hi = (xa, xb) if xa < xb else (xb, xa)
        d = fprime(x)
        xn = x - gx / d if (math.isfinite(d) and d != 0.0) else lo
        if not (lo < xn < hi):
            xn = 0.5 * (lo + hi)
        x = xn
    raise ConvergenceError("root iteration exceeded the iteration cap", best=x)


def sum_series(
    term: Callable[[int], float],
    tol: float = 1e-15,
    max_terms: int = 10000,
) -> float:
    """Sum term(0) + term(1) + ... until a geometric tail bound drops below tol.

    The tail is bounded from the last two term magnitudes; terms must
    eventually decrease geometrically for the bound to trigger.
    """
    total = 0.0
    comp = 0.0
    prev_mag: float | None = None
    for n in range(max_terms):
        t = term(n)
        if not math.isfinite(t):
            raise ConvergenceError(f"non-finite series term at n={n}")
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
        mag = abs(t)
        if prev_mag is not None:
            if mag == 0.0 and prev_mag == 0.0:
                return total
            if prev_mag > 0.0 and mag < prev_mag:
                ratio = mag / prev_mag
                if mag <= tol and mag * ratio / (1.0 - ratio) <= tol:
                    return total
        prev_mag = mag
    raise ConvergenceError(
        f"series tail bound not met within {max_terms} terms", best=total
    )
