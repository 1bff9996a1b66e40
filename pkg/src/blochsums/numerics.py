"""Scalar numerical kernel: bracketing root finder, sign-change scanner,
golden-section maximizer, and composite trapezoid quadrature.

Everything here is pure and deterministic.  Bisection is preferred wherever
a bracket exists because its convergence is unconditional, and none of the
objectives in this package is expensive enough to justify derivative-based
methods.  Quadrature is a plain composite trapezoid rule: the integrands we
meet are either smooth on the closed interval or trigonometric polynomials,
for which the rule is exact rather than approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

__all__ = [
    "RootResult",
    "bisect",
    "sign_changes",
    "golden_max",
    "trapezoid",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class RootResult:
    """Outcome of a bracketing root solve.

    ``converged`` records that the final bracket width dropped below the
    requested tolerance.  The residual ``f(root)`` is reported alongside so
    callers with steep objectives can apply their own acceptance threshold
    on top of the width criterion.
    """

    root: float
    bracket: Tuple[float, float]
    residual: float
    iterations: int
    converged: bool

    def __post_init__(self) -> None:
        lo, hi = self.bracket
        if not (lo <= self.root <= hi):
            raise ValueError("root must lie inside its bracket")


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-14,
    max_iter: int = 200,
) -> RootResult:
    """Bisection on a sign-changing bracket [lo, hi].

    Iterates until the bracket width is at most ``tol`` (or ``max_iter`` is
    hit) and returns the midpoint of the final bracket.  Raises ValueError
    when the endpoint values do not straddle zero.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return RootResult(lo, (lo, lo), 0.0, 0, True)
    if fhi == 0.0:
        return RootResult(hi, (hi, hi), 0.0, 0, True)
    if flo * fhi > 0.0:
        raise ValueError("not bracketed: f(lo) and f(hi) have the same sign")

    iterations = 0
    while (hi - lo) > tol and iterations < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # bracket no longer representable any tighter
        fmid = f(mid)
        iterations += 1
        if fmid == 0.0:
            lo = hi = mid
            flo = fhi = 0.0
            break
        if flo * fmid < 0.0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid

    root = 0.5 * (lo + hi)
    return RootResult(
        root=root,
        bracket=(lo, hi),
        residual=f(root),
        iterations=iterations,
        converged=(hi - lo) <= tol,
    )


def sign_changes(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    steps: int,
) -> List[Tuple[float, float]]:
    """Sample f on ``steps`` equispaced nodes and collect sign-change brackets.

    Returns every adjacent node pair whose values have strictly opposite
    signs.  This certifies zero counts only at grid resolution; callers
    report it as "no second sign change found at this resolution", never as
    a proof of uniqueness.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    h = (hi - lo) / (steps - 1)
    brackets: List[Tuple[float, float]] = []
    t_prev = lo
    v_prev = f(lo)
    for i in range(1, steps):
        t = lo + i * h if i < steps - 1 else hi
        v = f(t)
        if v_prev * v < 0.0:
            brackets.append((t_prev, t))
        t_prev, v_prev = t, v
    return brackets


def golden_max(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
) -> Tuple[float, float]:
    """Golden-section maximization of a unimodal f on [lo, hi].

    Returns ``(argmax, value)``.  Unimodality is the caller's responsibility;
    for a monotone function the search converges to the correct boundary.
    On non-unimodal input the result is a local maximizer, which callers
    guard against with a grid pre-scan.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = f(c)
    fd = f(d)
    while (b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    arg = 0.5 * (a + b)
    return arg, f(arg)


def trapezoid(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    m: int,
) -> float:
    """Composite trapezoid rule with ``m`` subintervals.

    For smooth integrands the error scales as O(m^-2); for trigonometric
    polynomials sampled over a full period the rule is exact once the node
    count exceeds the polynomial degree.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if not math.isfinite(lo) or not math.isfinite(hi):
        raise ValueError("integration limits must be finite")
    h = (hi - lo) / m
    total = 0.5 * (f(lo) + f(hi))
    for i in range(1, m):
        total += f(lo + i * h)
    return total * h
