"""Independent verification machinery.

Nothing in here knows the closed-form solutions: residuals come from
finite differences, trajectories from Runge-Kutta shooting, integrals
from Simpson quadrature and zero counts from the argument principle.
The solver modules are tested *against* these routines, so they must
stay decoupled from them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "BlowupError",
    "ContourTooClose",
    "ResidualReport",
    "ShootResult",
    "adaptive_simpson",
    "composite_simpson",
    "nlse_residual",
    "shoot",
    "argument_principle_count",
]


class BlowupError(RuntimeError):
    """Shooting trajectory overflowed; .position holds where it happened."""

    def __init__(self, position: float):
        super().__init__(f"trajectory blew up near x = {position:.6g}")
        self.position = position


class ContourTooClose(RuntimeError):
    """A zero (or pole) of the integrand sits too close to the contour."""


# ---------------------------------------------------------------------------
# quadrature


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-10,
                     max_depth: int = 48) -> float:
    """Adaptive Simpson quadrature of a scalar function with absolute tol."""
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth)


def _simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return (_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + _simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1))


def composite_simpson(y: np.ndarray, h: float) -> float:
    """Composite Simpson rule over uniformly sampled values (odd count)."""
    y = np.asarray(y, dtype=float)
    if y.size < 3 or y.size % 2 == 0:
        raise ValueError("composite_simpson needs an odd number of samples >= 3")
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-2:2].sum()))


# ---------------------------------------------------------------------------
# finite-difference residual of the stationary NLSE


@dataclass
class ResidualReport:
    """Outcome of a finite-difference check of (-1/2 psi'' + g psi^3 - mu psi)."""

    max_residual: float
    grid_step: float
    excluded_points: int
    jump_defects: list = field(default_factory=list)


def nlse_residual(x: np.ndarray, psi: np.ndarray, mu: float, g: float,
                  deltas: list[tuple[float, float]] | None = None) -> ResidualReport:
    """Check sampled psi against the stationary NLSE by central differences.

    x must be a uniform grid with step h <= 1e-2.  Points whose stencil
    straddles a delta position are excluded from the interior residual;
    at each delta the slope jump psi'(+)-psi'(-) - 2 lambda psi is
    estimated with one-sided second-order differences and reported in
    jump_defects (same order as deltas).
    """
    x = np.asarray(x, dtype=float)
    psi = np.asarray(psi, dtype=float)
    if x.ndim != 1 or x.size < 5 or x.shape != psi.shape:
        raise ValueError("need matching 1D arrays with at least 5 samples")
    steps = np.diff(x)
    h = steps[0]
    if not np.allclose(steps, h, rtol=1e-9, atol=0.0):
        raise ValueError("grid must be uniform")
    if h > 1e-2:
        raise ValueError(f"grid step {h:.3g} too coarse for a trustworthy residual")
    deltas = list(deltas or [])

    d2 = (psi[2:] - 2.0 * psi[1:-1] + psi[:-2]) / h**2
    res = np.abs(-0.5 * d2 + g * psi[1:-1] ** 3 - mu * psi[1:-1])

    keep = np.ones(res.size, dtype=bool)
    for pos, _ in deltas:
        keep &= np.abs(x[1:-1] - pos) > 1.5 * h
    excluded = int(res.size - keep.sum())

    jumps = []
    for pos, lam in deltas:
        i = int(np.argmin(np.abs(x - pos)))
        if i < 2 or i > x.size - 3:
            raise ValueError(f"delta at {pos} too close to the grid edge")
        right = (-3.0 * psi[i] + 4.0 * psi[i + 1] - psi[i + 2]) / (2.0 * h)
        left = (3.0 * psi[i] - 4.0 * psi[i - 1] + psi[i - 2]) / (2.0 * h)
        jumps.append(float(right - left - 2.0 * lam * psi[i]))

    max_res = float(res[keep].max()) if keep.any() else math.nan
    return ResidualReport(max_residual=max_res, grid_step=float(h),
                          excluded_points=excluded, jump_defects=jumps)


# ---------------------------------------------------------------------------
# RK4 shooting with exact delta jumps


@dataclass
class ShootResult:
    x: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray


def shoot(mu: float, g: float, deltas: list[tuple[float, float]],
          x_end: float, psi0: float, dpsi0: float, h: float = 1e-4) -> ShootResult:
    """Integrate psi'' = 2(g psi^3 - mu psi) from x = 0 with fixed-step RK4.

    Step boundaries are aligned with every delta position so the slope
    jump 2 lambda psi is applied exactly at the delta, preserving the
    O(h^4) global accuracy of the smooth segments.
    """
    if x_end <= 0.0 or h <= 0.0:
        raise ValueError("x_end and h must be positive")
    positions = sorted(pos for pos, _ in deltas)
    if any(not 0.0 < pos < x_end for pos in positions):
        raise ValueError("delta positions must lie strictly inside (0, x_end)")
    strength = {round(pos, 15): lam for pos, lam in deltas}

    bounds = [0.0] + positions + [x_end]
    xs = [np.array([0.0])]
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        n = max(1, int(math.ceil((hi - lo) / h)))
        xs.append(np.linspace(lo, hi, n + 1)[1:])
    x = np.concatenate(xs)

    psi = np.empty_like(x)
    dpsi = np.empty_like(x)
    y, dy = float(psi0), float(dpsi0)
    psi[0], dpsi[0] = y, dy

    def acc(v):
        return 2.0 * (g * v**3 - mu * v)

    pos_set = {round(p, 15) for p in positions}
    for i in range(1, x.size):
        step = x[i] - x[i - 1]
        k1, l1 = dy, acc(y)
        k2, l2 = dy + 0.5 * step * l1, acc(y + 0.5 * step * k1)
        k3, l3 = dy + 0.5 * step * l2, acc(y + 0.5 * step * k2)
        k4, l4 = dy + step * l3, acc(y + step * k3)
        y = y + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        dy = dy + step / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4)
        if abs(y) > 1e12 or not math.isfinite(y):
            raise BlowupError(float(x[i]))
        key = round(float(x[i]), 15)
        if key in pos_set:
            dy += 2.0 * strength[key] * y
        psi[i], dpsi[i] = y, dy
    return ShootResult(x=x, psi=psi, dpsi=dpsi)


# ---------------------------------------------------------------------------
# argument-principle zero counting


def argument_principle_count(f, re_min: float, re_max: float,
                             im_min: float, im_max: float,
                             n_samples: int = 2000) -> int:
    """Count zeros of an analytic f inside a rectangle by winding number.

    The rectangle boundary is sampled counterclockwise with n_samples
    points per edge; if min |f| on the contour drops below 1e-8 a zero
    is effectively on the boundary and ContourTooClose is raised.
    """
    if re_min >= re_max or im_min >= im_max:
        raise ValueError("rectangle must have positive extent")
    t = np.linspace(0.0, 1.0, n_samples, endpoint=False)
    bottom = re_min + t * (re_max - re_min) + 1j * im_min
    right = re_max + 1j * (im_min + t * (im_max - im_min))
    top = re_max - t * (re_max - re_min) + 1j * im_max
    left = re_min + 1j * (im_max - t * (im_max - im_min))
    contour = np.concatenate([bottom, right, top, left])

    vals = np.array([f(z) for z in contour], dtype=complex)
    mods = np.abs(vals)
    if mods.min() < 1e-8:
        raise ContourTooClose(
            f"min |f| = {mods.min():.3e} on the contour; shrink or shift the rectangle")

    ang = np.angle(vals)
    d = np.diff(np.concatenate([ang, ang[:1]]))
    d = (d + math.pi) % (2.0 * math.pi) - math.pi
    total = d.sum() / (2.0 * math.pi)
    count = int(round(total))
    if abs(total - count) > 1e-3:
        raise ContourTooClose(
            f"winding number {total:.6f} is not an integer; increase n_samples")
    return count
