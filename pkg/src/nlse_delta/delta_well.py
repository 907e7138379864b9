"""Single delta potential: stationary states of
(-1/2 d^2/dx^2 + lam delta(x) + g |psi|^2) psi = mu psi.

Localized solutions are symmetric, normalized to 1, and exist below a
critical delta strength (or nonlinearity); above it the normalized
branch continues into periodic cn scattering states.  The attractive
(g < 0) and repulsive (g > 0) nonlinearities carry different families:

    g < 0   (k/sqrt|g|) sech(k(|x| - x0)),  tanh(k x0) = lam/k
    g = 0   sqrt(-lam) exp(lam |x|)
    g > 0   (k/sqrt g) csch(k(|x| - x0)),   tanh(k x0) = k/lam, x0 < 0

with k = -lam - g/2 fixed by normalization and mu = -k^2/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from ._util import NoSolutionError, bracket_sign_changes, invert_cn
from .elliptic import complete_K, jacobi
from .oracle import composite_simpson
from .states import (BRIGHT_SECH, CN, COSECH, CRITICAL_RATIONAL, LINEAR_EXP,
                     PeriodicWave, SolitonState, make_periodic_wave)

__all__ = [
    "ATTRACTIVE",
    "REPULSIVE",
    "CriticalValues",
    "TransitionDiagnostics",
    "matching_defect",
    "bound_state",
    "critical_values",
    "critical_wavefunction",
    "bright_scattering_state",
    "norm_per_period",
    "transition_diagnostics",
    "dark_soliton",
]

ATTRACTIVE = "attractive"
REPULSIVE = "repulsive"

LAMBDA_C_ATTRACTIVE = 0.25   # sech branch at g = -1
LAMBDA_C_REPULSIVE = -0.5    # cosech branch at g = +1


def matching_defect(left_slope: float, right_slope: float, value: float,
                    lam: float) -> float:
    """Defect of the delta matching condition psi'(+) - psi'(-) = 2 lam psi."""
    return (right_slope - left_slope) - 2.0 * lam * value


def bound_state(lam: float, g: float) -> SolitonState | None:
    """Normalized localized state for delta strength lam and nonlinearity g.

    Returns None when no such state exists.  Existence:

        g < 0:  lam < |g|/4   (at larger lam the tanh matching saturates
                               and the state splits into two receding solitons)
        g = 0:  lam < 0
        g > 0:  lam < -g/2    (k > 0); at g = -2 lam exactly, the k -> 0
                               limit survives as a normalized rational
                               profile and is returned as such

    Note the g < 0 boundary: for lam > 0 the binding constraint is the
    matching condition |lam| < k, which bites at lam = |g|/4, before the
    k > 0 condition lam < |g|/2 does.
    """
    if not (math.isfinite(lam) and math.isfinite(g)):
        raise ValueError(f"lam and g must be finite, got {lam!r}, {g!r}")

    if g == 0.0:
        if lam >= 0.0:
            return None
        k = -lam
        return SolitonState(mu=-0.5 * k * k, k=k, x0=math.nan, lam=lam, g=g,
                            family=LINEAR_EXP)

    k = -lam - 0.5 * g
    if g < 0.0:
        if lam >= 0.25 * abs(g):
            return None
        x0 = math.atanh(lam / k) / k
        return SolitonState(mu=-0.5 * k * k, k=k, x0=x0, lam=lam, g=g,
                            family=BRIGHT_SECH)

    # g > 0
    if k < 0.0:
        return None
    if k == 0.0:
        # g = -2 lam exactly: psi = 1/(sqrt(g)(|x| - 1/lam)), mu = 0.
        return SolitonState(mu=0.0, k=0.0, x0=1.0 / lam, lam=lam, g=g,
                            family=CRITICAL_RATIONAL)
    x0 = math.atanh(k / lam) / k
    return SolitonState(mu=-0.5 * k * k, k=k, x0=x0, lam=lam, g=g,
                        family=COSECH)


@dataclass(frozen=True)
class CriticalValues:
    lambda_c: float
    mu_c: float
    g_c: float


def critical_values(lam: float, branch: str) -> CriticalValues:
    """Critical parameters of the localized branch.

    branch = ATTRACTIVE refers to g = -1 (lambda_c = 1/4, mu_c = -1/32),
    branch = REPULSIVE to g = +1 (lambda_c = -1/2, mu_c = 0).  g_c = -2 lam
    is the critical nonlinearity at fixed lam in both conventions.
    """
    if branch == ATTRACTIVE:
        return CriticalValues(lambda_c=LAMBDA_C_ATTRACTIVE, mu_c=-1.0 / 32.0,
                              g_c=-2.0 * lam)
    if branch == REPULSIVE:
        return CriticalValues(lambda_c=LAMBDA_C_REPULSIVE, mu_c=0.0,
                              g_c=-2.0 * lam)
    raise ValueError(f"branch must be {ATTRACTIVE!r} or {REPULSIVE!r}")


def critical_wavefunction(lam: float, x):
    """Closed-form critical profile sqrt(-lam)/(|x| - 2 lam) for lam < 0.

    This form integrates to exactly 1 for every lam < 0 but satisfies
    the mu = 0 stationary equation only at lam = -1/sqrt(2): the pole
    sits at 2 lam instead of 1/lam.  The exact k -> 0 limit of the
    cosech branch is 1/(sqrt(-2 lam) (|x| - 1/lam)), which is what
    bound_state returns at g = -2 lam; the two coincide at lam = -1/2
    only in their normalization.  Both are kept so either convention
    can be checked.
    """
    if not lam < 0.0:
        raise ValueError("critical_wavefunction requires lam < 0")
    out = math.sqrt(-lam) / (np.abs(np.asarray(x, dtype=float)) - 2.0 * lam)
    return float(out) if np.ndim(x) == 0 else out


# ---------------------------------------------------------------------------
# continuation beyond lambda_c (g = -1): periodic cn scattering states


def bright_scattering_state(lam: float, mu: float | None = None,
                            psi0: float | None = None) -> PeriodicWave:
    """Periodic cn state continuing the g = -1 localized branch past lam_c.

    The continuation pins mu = -(2 lam - 1)^2/8 and the on-site value to
    |k sech(arctanh(lam/k))| = sqrt(lam - 1/4) (the bound-state relation
    psi(0)^2 = k^2 - lam^2 continued through its sign change), then
    solves the two matching conditions

        A(p) cn(u0 | p) = psi(0)
        A(p) alpha(p) sn(u0 | p) dn(u0 | p) = lam psi(0)

    for the modulus p in (1/2, 1) and the phase u0 = alpha x0, with
    alpha = k/sqrt(2p - 1) and A = k sqrt(p/(2p - 1)).
    """
    if not lam > LAMBDA_C_ATTRACTIVE:
        raise ValueError("scattering continuation requires lam > 1/4")
    if mu is None:
        mu = -((2.0 * lam - 1.0) ** 2) / 8.0
    if psi0 is None:
        psi0 = math.sqrt(lam - 0.25)
    k = math.sqrt(-2.0 * mu)
    if k == 0.0:
        raise NoSolutionError("mu = 0 leaves the cn continuation degenerate")

    def residual(p: float) -> float:
        alpha = k / math.sqrt(2.0 * p - 1.0)
        amp = math.sqrt(p) * alpha
        c0 = psi0 / amp
        if c0 > 1.0 + 1e-9:
            return math.nan
        K = complete_K(p)
        u0 = invert_cn(min(c0, 1.0), p, K)
        sn, _, dn = jacobi(u0, p)
        return amp * alpha * sn * dn - lam * psi0

    # Admissible moduli: A(p) >= psi0, i.e. p/(2p-1) >= (psi0/k)^2.  The
    # amplitude falls from infinity (p -> 1/2) to k (p -> 1), so the window
    # is (1/2, p_hi] with p_hi < 1 whenever psi0 > k.
    big = (psi0 / k) ** 2
    p_hi = big / (2.0 * big - 1.0) if big > 1.0 else 1.0
    p_hi = min(p_hi, 1.0 - 1e-13)
    # Grid dense toward both window edges: the root hugs p_hi for large lam
    # and runs to p -> 1 as lam -> lam_c.
    t = np.unique(np.concatenate([np.logspace(-14, 0, 43),
                                  1.0 - np.logspace(-14, -0.33, 31)]))
    grid = 0.5 + (p_hi - 0.5) * t[(t > 0.0) & (t <= 1.0)]
    grid = grid[2.0 * grid - 1.0 > 0.0]
    brackets = bracket_sign_changes(residual, grid)
    if not brackets:
        raise NoSolutionError(
            f"no modulus bracket for lam = {lam}: scanned p in "
            f"({grid[0]:.3e}, {grid[-1]:.15f})")
    lo, hi = brackets[0]
    p = lo if lo == hi else brentq(residual, lo, hi, xtol=1e-15, rtol=8.9e-16)

    alpha = k / math.sqrt(2.0 * p - 1.0)
    amp = math.sqrt(p) * alpha
    K = complete_K(p)
    u0 = invert_cn(psi0 / amp, p, K)
    x0 = u0 / alpha
    wave = make_periodic_wave(CN, p, mu, -1.0, x0)
    # make_periodic_wave rebuilds A and L from (p, mu); they must agree
    # with the direct parameterization used in the solve.
    assert abs(wave.amplitude - amp) < 1e-9 * amp
    return wave


def norm_per_period(wave: PeriodicWave, n_samples: int = 8193) -> float:
    """Integral of psi^2 over one full period of a periodic wave."""
    half = 0.5 * wave.period
    x = np.linspace(wave.x0 - half, wave.x0 + half, n_samples)
    return composite_simpson(wave.psi(x) ** 2, x[1] - x[0])


@dataclass(frozen=True)
class TransitionDiagnostics:
    """Center offset and norm per period across the lam_c transition."""

    lam: float
    x0: float
    norm_per_period: float


def transition_diagnostics(lam: float) -> TransitionDiagnostics:
    """x0(lam) and the norm per period on either side of lam_c = 1/4 (g = -1).

    Below lam_c the state is the normalized sech soliton (norm 1 by
    construction); above, the cn continuation.  x0 has a logarithmic
    singularity at lam_c from both sides, so lam = 1/4 itself is out of
    domain.
    """
    if lam == LAMBDA_C_ATTRACTIVE:
        raise ValueError("x0 diverges logarithmically at lam = 1/4")
    if lam < LAMBDA_C_ATTRACTIVE:
        k = 0.5 - lam
        x0 = math.atanh(lam / k) / k if lam != 0.0 else 0.0
        return TransitionDiagnostics(lam=lam, x0=x0, norm_per_period=1.0)
    wave = bright_scattering_state(lam)
    return TransitionDiagnostics(lam=lam, x0=wave.x0,
                                 norm_per_period=norm_per_period(wave))


def dark_soliton(mu: float, lam: float) -> float:
    """Center offset of the dark soliton sqrt(mu) tanh(sqrt(mu)(x - x0)), g > 0.

    Matching the odd tanh profile across the delta forces x0 = 0 for
    every lam: psi(0) = 0 makes the slope-jump condition vacuous.
    Returns that x0.
    """
    if not mu > 0.0:
        raise ValueError("dark solitons require mu > 0")
    return 0.0
