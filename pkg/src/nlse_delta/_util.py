"""Small numeric helpers shared across modules."""

from __future__ import annotations

import numpy as np
from scipy.optimize import brentq

from .elliptic import jacobi

__all__ = ["NoSolutionError", "NonConvergenceError", "sech", "csch",
           "bracket_sign_changes", "invert_cn", "invert_sn"]


class NoSolutionError(RuntimeError):
    """A matching problem has no solution in the admissible range."""


class NonConvergenceError(RuntimeError):
    """An iterative solve failed; the message carries the trace."""


def sech(z):
    """Overflow-safe sech for real arguments of any magnitude."""
    z = np.asarray(z, dtype=float)
    e = np.exp(-np.abs(z))
    out = 2.0 * e / (1.0 + e * e)
    return float(out) if out.ndim == 0 else out


def csch(z):
    """Overflow-safe csch; diverges at z = 0 (caller keeps z away from 0)."""
    z = np.asarray(z, dtype=float)
    e = np.exp(-np.abs(z))
    out = np.sign(z) * 2.0 * e / (1.0 - e * e)
    return float(out) if out.ndim == 0 else out


def bracket_sign_changes(fn, grid) -> list[tuple[float, float]]:
    """Scan fn over the given 1D grid and return intervals with a sign change.

    Grid points where fn is not finite are skipped (the interval between
    the surrounding finite evaluations is not reported as a bracket).
    """
    brackets = []
    x_prev = None
    f_prev = None
    for x in grid:
        f = fn(x)
        if not np.isfinite(f):
            x_prev, f_prev = None, None
            continue
        if f == 0.0:
            brackets.append((x, x))
        elif f_prev is not None and np.sign(f) != np.sign(f_prev):
            brackets.append((x_prev, x))
        x_prev, f_prev = x, f
    return brackets


def invert_cn(c: float, p: float, K: float) -> float:
    """Solve cn(u | p) = c on [0, 2K], where cn falls monotonically 1 -> -1."""
    if not -1.0 <= c <= 1.0:
        raise ValueError(f"cn value out of range: {c!r}")
    if c >= 1.0:
        return 0.0
    if c <= -1.0:
        return 2.0 * K
    return brentq(lambda u: jacobi(u, p).cn - c, 0.0, 2.0 * K, xtol=1e-15, rtol=8.9e-16)


def invert_sn(s: float, p: float, K: float) -> float:
    """Solve sn(u | p) = s on [-K, K], where sn rises monotonically -1 -> 1."""
    if not -1.0 <= s <= 1.0:
        raise ValueError(f"sn value out of range: {s!r}")
    if s >= 1.0:
        return K
    if s <= -1.0:
        return -K
    return brentq(lambda u: jacobi(u, p).sn - s, -K, K, xtol=1e-15, rtol=8.9e-16)
