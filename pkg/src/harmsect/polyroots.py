"""Real-root isolation for low-degree polynomials by sign-change scanning.

Good enough for the handful of fixed degree <= 8 polynomials this package
has to certify: scan a bracket at 1e-5 of its width, bisect every sign
change, then polish with guarded Newton steps.  Points where the value is
tiny but the sign does not change are reported as suspected even-order
roots via a warning and included in the result.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

SCAN_POINTS = 100_000
NEAR_ZERO = 1e-12


@dataclass(frozen=True)
class RealPolynomial:
    """Dense real polynomial, coefficients in ascending degree order.

    Evaluation is plain Horner in the given coefficient order; the
    coefficients are never re-expanded or reordered, so a transcription
    error in them shows up as a failed identity check rather than drifting
    silently.
    """

    coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) == 0:
            raise ValueError("polynomial needs at least one coefficient")
        object.__setattr__(self, "coefficients", tuple(float(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        for i in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[i] != 0.0:
                return i
        return 0

    def __call__(self, x):
        acc = np.zeros_like(np.asarray(x, dtype=float)) if not np.isscalar(x) else 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RealPolynomial":
        if len(self.coefficients) == 1:
            return RealPolynomial((0.0,))
        return RealPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i > 0))

    def scaled(self, factor: float) -> "RealPolynomial":
        return RealPolynomial(tuple(factor * c for c in self.coefficients))


def _bisect(p: RealPolynomial, lo: float, hi: float, flo: float) -> float:
    while hi - lo > 1e-13 * max(1.0, abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        fmid = p(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _newton_polish(p: RealPolynomial, x: float, lo: float, hi: float) -> float:
    dp = p.derivative()
    best, best_val = x, abs(p(x))
    for _ in range(4):
        d = dp(x)
        if d == 0.0:
            break
        step = p(x) / d
        x = x - step
        if not lo <= x <= hi:
            break
        val = abs(p(x))
        if val < best_val:
            best, best_val = x, val
        if val == 0.0:
            break
    return best


def isolate_real_roots(p: RealPolynomial, lo: float, hi: float) -> list[float]:
    """All real roots of p in [lo, hi], to ~1e-8 or better.

    Sign-change scan at step (hi-lo)/1e5, bisection on each change, Newton
    polish afterwards.  An even-order root that touches zero without a sign
    change is caught by the near-zero test |p| < 1e-12 * scale and included
    with a warning, since the scan alone cannot certify it.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    xs = np.linspace(lo, hi, SCAN_POINTS + 1)
    vals = p(xs)

    roots: list[float] = []

    exact = np.nonzero(vals == 0.0)[0]
    for i in exact:
        roots.append(float(xs[i]))

    sgn = np.sign(vals)
    change = np.nonzero((sgn[:-1] * sgn[1:]) < 0)[0]
    step = (hi - lo) / SCAN_POINTS
    for i in change:
        a, b = float(xs[i]), float(xs[i + 1])
        root = _bisect(p, a, b, float(vals[i]))
        roots.append(_newton_polish(p, root, a - step, b + step))

    # near-zero dips without a sign change anywhere nearby: suspected
    # even-order roots (absolute threshold; a simple root's neighbours sit
    # orders of magnitude above it)
    taken = set(exact) | {j for i in change for j in (i - 1, i, i + 1, i + 2)}
    near = np.nonzero((np.abs(vals) < NEAR_ZERO) & (vals != 0.0))[0]
    for i in near:
        if i in taken:
            continue
        left = vals[i - 1] if i > 0 else vals[i]
        right = vals[i + 1] if i < SCAN_POINTS else vals[i]
        if np.sign(left) == np.sign(right) and np.sign(left) != 0:
            x = _newton_polish(p, float(xs[i]), float(xs[i]) - step, float(xs[i]) + step)
            warnings.warn(
                f"near-zero value without sign change at x={x}; "
                f"reporting a suspected even-order root",
                stacklevel=2,
            )
            roots.append(x)

    roots.sort()
    merged: list[float] = []
    for root in roots:
        if not merged or abs(root - merged[-1]) > 2.0 * step:
            merged.append(root)
    return merged
