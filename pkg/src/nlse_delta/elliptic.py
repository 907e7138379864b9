"""Jacobi elliptic functions and the complete elliptic integral of the first kind.

The modulus argument ``p`` follows the convention in which the functions
interpolate between trigonometric behaviour at p = 0 and hyperbolic
behaviour at p = 1:

    sn(u | 0) = sin u,   sn(u | 1) = tanh u
    cn(u | 0) = cos u,   cn(u | 1) = sech u
    dn(u | 0) = 1,       dn(u | 1) = sech u

(Some libraries call this argument m; it is the square of the modulus k
used in Legendre's notation.)

K(p) is computed with the arithmetic-geometric mean; sn/cn/dn with the
descending Landen (Gauss) transformation in its phase-recursion form.
Both are self-contained and accept p right up to the hyperbolic limit.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

__all__ = ["JacobiTriple", "complete_K", "jacobi"]

_AGM_RTOL = 1e-15
_AGM_MAX_ITER = 64


class JacobiTriple(NamedTuple):
    """Values of the three basic Jacobi functions at a common argument."""

    sn: float | np.ndarray
    cn: float | np.ndarray
    dn: float | np.ndarray


def _agm_sequence(p: float) -> tuple[list[float], list[float]]:
    """Run the AGM iteration for modulus p, returning the a_n and c_n scales."""
    a = [1.0]
    c = [math.sqrt(p)]
    b = math.sqrt(1.0 - p)
    for _ in range(_AGM_MAX_ITER):
        if abs(a[-1] - b) < _AGM_RTOL * a[-1]:
            break
        a_next = 0.5 * (a[-1] + b)
        c.append(0.5 * (a[-1] - b))
        b = math.sqrt(a[-1] * b)
        a.append(a_next)
    return a, c


def complete_K(p: float) -> float:
    """Complete elliptic integral K(p) = int_0^{pi/2} (1 - p sin^2 t)^(-1/2) dt.

    Valid for 0 <= p < 1; K(0) = pi/2, and K diverges logarithmically
    as p -> 1.
    """
    if not math.isfinite(p) or p < 0.0 or p >= 1.0:
        raise ValueError(f"complete_K requires 0 <= p < 1, got {p!r}")
    a, _ = _agm_sequence(p)
    return math.pi / (2.0 * a[-1])


def jacobi(u, p: float) -> JacobiTriple:
    """Evaluate sn, cn, dn at argument u for modulus p in [0, 1].

    u may be a scalar or an ndarray; evaluation is elementwise with a
    single scalar modulus.  At p = 1 the hyperbolic closed forms are
    used; otherwise the argument is reduced modulo the real period 4K(p)
    before the Landen phase recursion, which keeps the recursion phases
    small and the results accurate for arguments many periods out.
    """
    if not math.isfinite(p) or p < 0.0 or p > 1.0:
        raise ValueError(f"jacobi requires 0 <= p <= 1, got {p!r}")
    u_arr = np.asarray(u, dtype=float)
    scalar = u_arr.ndim == 0

    if p == 1.0:
        sn = np.tanh(u_arr)
        cn = 1.0 / np.cosh(u_arr)
        triple = JacobiTriple(sn, cn, cn.copy())
        return _as_scalar(triple) if scalar else triple

    a, c = _agm_sequence(p)
    n_levels = len(a) - 1
    if n_levels == 0:
        # p small enough that the AGM converged immediately (p = 0 in practice).
        sn = np.sin(u_arr)
        cn = np.cos(u_arr)
        dn = np.ones_like(u_arr)
        triple = JacobiTriple(sn, cn, dn)
        return _as_scalar(triple) if scalar else triple

    quarter_K = math.pi / (2.0 * a[-1])
    period = 4.0 * quarter_K
    u_red = u_arr - period * np.round(u_arr / period)

    phi = (2.0**n_levels * a[-1]) * u_red
    phi_above = phi
    for n in range(n_levels, 0, -1):
        phi_above = phi
        s = np.clip((c[n] / a[n]) * np.sin(phi), -1.0, 1.0)
        phi = 0.5 * (phi + np.arcsin(s))

    sn = np.sin(phi)
    cn = np.cos(phi)
    # The phase-ratio form of dn is accurate for p -> 1 but degenerates
    # to 0/0 at odd quarter periods (cn -> 0); there sn^2 ~ 1 makes the
    # defining identity dn = sqrt(1 - p sn^2) exact, so switch over.
    ratio = np.cos(phi_above - phi)
    near_quarter = np.abs(cn) < 1e-4
    safe = np.where(near_quarter, 1.0, ratio)
    dn = np.where(near_quarter, np.sqrt(1.0 - p * sn * sn), cn / safe)
    triple = JacobiTriple(sn, cn, dn)
    return _as_scalar(triple) if scalar else triple


def _as_scalar(t: JacobiTriple) -> JacobiTriple:
    return JacobiTriple(float(t.sn), float(t.cn), float(t.dn))
