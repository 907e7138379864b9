"""Linear scattering off a delta-shell inside a hard wall:
V(x) = infinity for x < 0, lam delta(x - a) for x > 0.

States at energy E = k^2/2 vanish at the wall and pick up a phase shift
from the shell:

    psi_k(x) = sin(kx)                                       x < a
    psi_k(x) = sin(kx) + (2 lam / k) sin(ka) sin(k(x - a))   x > a

    tan delta(k) = (cos 2ka - 1) / (sin 2ka + k/lam)

S-matrix poles solve exp(2ika) = 1 - ik/lam; their half-plane decides
their nature (bound, virtual, or resonance).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from ._util import NonConvergenceError, bracket_sign_changes

__all__ = [
    "ShellConfig",
    "ShellPole",
    "linear_wavefunction",
    "phase_shift",
    "s_matrix",
    "pole_condition",
    "find_poles",
    "bound_state_criterion",
    "amplitude_ratio_linear",
]


@dataclass(frozen=True)
class ShellConfig:
    """Shell radius a > 0 and delta strength lam (lam = 0 is a
    transparent shell: no phase shift, no poles)."""

    a: float
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise ValueError(f"shell radius must be positive, got {self.a!r}")
        if not math.isfinite(self.lam):
            raise ValueError(f"shell strength must be finite, got {self.lam!r}")


def linear_wavefunction(cfg: ShellConfig, k: float, x):
    """Scattering wavefunction at momentum k > 0, for x >= 0."""
    if not k > 0.0:
        raise ValueError("k must be positive")
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr < 0.0):
        raise ValueError("the wavefunction lives on x >= 0")
    outside = (2.0 * cfg.lam / k) * math.sin(k * cfg.a) * np.sin(k * (x_arr - cfg.a))
    out = np.sin(k * x_arr) + np.where(x_arr > cfg.a, outside, 0.0)
    return float(out) if np.ndim(x) == 0 else out


def phase_shift(cfg: ShellConfig, k):
    """Phase shift delta(k) for k > 0 (scalar or array).

    Scalars give the atan2 principal value; arrays are treated as a scan
    in k and unwrapped modulo pi so the curve stays continuous through
    the resonance jumps (which are rapid but resolved, not branch cuts).
    """
    if cfg.lam == 0.0:
        raise ValueError("phase shift needs a nonzero shell strength")
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr <= 0.0):
        raise ValueError("k must be positive")
    num = np.cos(2.0 * k_arr * cfg.a) - 1.0
    den = np.sin(2.0 * k_arr * cfg.a) + k_arr / cfg.lam
    delta = np.arctan2(num, den)
    if np.ndim(k) == 0:
        return float(delta)
    return np.unwrap(delta, discont=math.pi / 2.0, period=math.pi)


def s_matrix(cfg: ShellConfig, k) -> complex:
    """S(k) = (1 + i tan delta)/(1 - i tan delta), continued to complex k.

    At a pole of S the value complex(inf, inf) is returned rather than
    raising, so pole hunting can evaluate nearby freely.
    """
    if cfg.lam == 0.0:
        return 1.0 + 0.0j
    kc = complex(k)
    num = cmath.cos(2.0 * kc * cfg.a) - 1.0
    den = cmath.sin(2.0 * kc * cfg.a) + kc / cfg.lam
    if den == 0.0:
        # tan delta diverges; the Moebius map sends it to S = -1.
        return -1.0 + 0.0j
    t = num / den
    bottom = 1.0 - 1j * t
    if bottom == 0.0:
        return complex(math.inf, math.inf)
    return (1.0 + 1j * t) / bottom


def pole_condition(cfg: ShellConfig, k) -> complex:
    """f(k) = exp(2ika) - 1 + ik/lam, whose zeros are the S-matrix poles."""
    if cfg.lam == 0.0:
        raise ValueError("pole condition is undefined for a transparent shell")
    kc = complex(k)
    return cmath.exp(2j * kc * cfg.a) - 1.0 + 1j * kc / cfg.lam


@dataclass(frozen=True)
class ShellPole:
    """One root of the pole condition.

    kind is 'bound' (positive imaginary axis), 'virtual' (negative
    imaginary axis), 'resonance' (lower half-plane, Re k > 0) or
    'ambiguous' (within 1e-10 of the real axis).  energy = k^2/2,
    E = Re energy, Gamma = -2 Im energy >= 0.  n indexes the resonance
    band (roughly Re k about n pi/a); imaginary-axis poles carry n = 0.
    """

    k: complex
    energy: complex
    E: float
    Gamma: float
    n: int
    kind: str


_AXIS_TOL = 1e-10


def _classify(k: complex) -> str:
    if abs(k.real) < _AXIS_TOL:
        return "bound" if k.imag > 0.0 else "virtual"
    if abs(k.imag) < _AXIS_TOL:
        return "ambiguous"
    if k.imag < 0.0 and k.real > 0.0:
        return "resonance"
    return "ambiguous"


def _make_pole(cfg: ShellConfig, k: complex, n: int) -> ShellPole:
    energy = 0.5 * k * k
    return ShellPole(k=k, energy=energy, E=energy.real,
                     Gamma=-2.0 * energy.imag, n=n, kind=_classify(k))


def _newton(cfg: ShellConfig, k0: complex) -> complex | None:
    k = k0
    for _ in range(60):
        f = pole_condition(cfg, k)
        if abs(f) < 1e-13:
            return k
        df = 2j * cfg.a * cmath.exp(2j * k * cfg.a) + 1j / cfg.lam
        if df == 0.0:
            return None
        step = f / df
        k = k - step
        if not (math.isfinite(k.real) and math.isfinite(k.imag)):
            return None
    return k if abs(pole_condition(cfg, k)) < 1e-11 else None


def find_poles(cfg: ShellConfig, n_max: int) -> list[ShellPole]:
    """All pole-condition roots up to the n_max-th resonance band.

    Returns imaginary-axis roots (bound/virtual states, found by real
    bracketing on the axis) plus complex resonance roots with Re k in
    bands n = 1..n_max (Newton from asymptotic seeds, deduplicated at
    1e-8).  n_max = 0 returns axis roots alone.  Only Re k >= 0
    representatives are kept; the -conj(k) partners carry no extra
    information.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    a, lam = cfg.a, cfg.lam
    if lam == 0.0:
        return []  # transparent shell: S = 1 everywhere
    poles: list[ShellPole] = []

    # Imaginary axis (only attractive shells support roots there):
    # k = i kappa needs exp(-2 kappa a) = 1 - kappa/|lam|, k = -i kappa needs
    # exp(2 kappa a) = 1 + kappa/|lam|.  The bound/virtual pair exchanges at
    # 2 a |lam| = 1.
    if lam < 0.0:
        mag = abs(lam)
        if 2.0 * a * mag > 1.0:
            # Bound root, solved for s = 1 - kappa/|lam| (the root hugs
            # kappa = |lam| exponentially for large a |lam|).
            def t(s):
                return math.log(s) + 2.0 * a * mag * (1.0 - s)

            s_lo = 0.5 * math.exp(-2.0 * a * mag)
            if s_lo == 0.0:
                kappa = mag
            else:
                s_root = brentq(t, s_lo, 1.0 / (2.0 * a * mag),
                                xtol=5e-324, rtol=8.9e-16)
                kappa = mag * (1.0 - s_root)
            poles.append(_make_pole(cfg, complex(0.0, kappa), 0))
        elif 2.0 * a * mag < 1.0:
            def f_virtual(q):
                return 2.0 * q * a - math.log1p(q / mag)

            hi = 1.0 / a
            for _ in range(200):
                if f_virtual(hi) > 0.0:
                    break
                hi *= 2.0
            kappa = brentq(f_virtual, 1e-300, hi, xtol=1e-15, rtol=8.9e-16)
            if kappa > 1e-8:
                poles.append(_make_pole(cfg, complex(0.0, -kappa), 0))

    # Resonance bands: seeds from the large-|lam| expansion of the root
    # near n pi / a, then Newton.
    for n in range(1, n_max + 1):
        kr = n * math.pi / a
        seeds = [complex(kr - kr / (2.0 * a * lam), -kr**2 / (4.0 * a * lam**2)),
                 complex(kr, -0.05 / a), complex(kr * (1.0 - 0.1 / n), -0.4 / a),
                 complex(kr, -1.5 / a)]
        root = None
        for seed in seeds:
            cand = _newton(cfg, seed)
            if cand is None:
                continue
            if cand.real < 0.0:
                cand = complex(-cand.real, cand.imag)  # mirror partner
            band = round(cand.real * a / math.pi)
            if band == n and cand.imag < _AXIS_TOL:
                root = cand
                break
        if root is None:
            raise NonConvergenceError(
                f"no pole found in band n = {n} for a = {a}, lam = {lam}; "
                f"seeds tried: {seeds}")
        if all(abs(root - q.k) > 1e-8 for q in poles):
            poles.append(_make_pole(cfg, root, n))
    return poles


def bound_state_criterion(cfg: ShellConfig) -> bool:
    """Truth value of 'lam a > -1/2', reported as stated.

    Classification of actual poles does not use this: numerically the
    shell supports a positive-imaginary-axis (bound) root exactly when
    lam a < -1/2, i.e. when this predicate is False, so the inequality
    as quoted points the other way from its own prose ('sufficiently
    attractive').  find_poles locates roots unconditionally; compare
    with this flag to see the mismatch.
    """
    return cfg.lam * cfg.a > -0.5


def amplitude_ratio_linear(cfg: ShellConfig, E):
    """Ratio of the inner to outer sinusoid amplitude at energy E = k^2/2."""
    E_arr = np.asarray(E, dtype=float)
    if np.any(E_arr <= 0.0):
        raise ValueError("E must be positive")
    k = np.sqrt(2.0 * E_arr)
    ka = k * cfg.a
    pref = 2.0 * cfg.lam / k
    pc = 1.0 + pref * np.sin(ka) * np.cos(ka)
    qc = -pref * np.sin(ka) ** 2
    out = 1.0 / np.hypot(pc, qc)
    return float(out) if np.ndim(E) == 0 else out
