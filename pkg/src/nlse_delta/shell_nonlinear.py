"""Nonlinear resonances of the hard-wall-plus-delta-shell potential.

The interior x in [0, a] carries a cn (g < 0) or sn (g > 0) wave that
vanishes at the wall; the exterior x > a carries a second wave of the
same kind and the same chemical potential.  The two are glued at the
shell by continuity and the derivative jump 2 lam psi(a).  Because the
states are not normalizable, the interaction strength is measured by
the effective nonlinearity g_eff = g * int_0^a psi^2 dx, and resonances
appear as maxima of the interior/exterior amplitude ratio.

Matching uses the first integral of the stationary equation,

    (psi')^2 + 2 mu psi^2 - g psi^4 = const,

whose side-dependent constant is (4 mu^2/|g|) f(p) with
f_cn(p) = p(1-p)/(1-2p)^2 and f_sn(p) = p/(1+p)^2.  Taking the
difference across the shell turns the derivative jump into one scalar
equation for the outer modulus p_r, solved here in closed form since
both f's are strictly increasing on their admissible ranges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from ._util import (
    NonConvergenceError,
    NoSolutionError,
    bracket_sign_changes,
    invert_cn,
    invert_sn,
)
from .elliptic import complete_K, jacobi
from .oracle import composite_simpson
from .shell_linear import ShellConfig
from .states import CN, SN, PeriodicWave, make_periodic_wave

__all__ = [
    "MatchedShellSolution",
    "Resonance",
    "ResonanceScan",
    "left_wave_for",
    "match_at_shell",
    "effective_nonlinearity",
    "matched_solution_for",
    "scan_resonances",
    "mu_greater_approx",
    "mu_less_approx",
    "period_less",
    "mu_greater_exact",
    "mu_less_exact",
    "repulsive_existence_threshold",
]

# Smallest interior modulus used by the g_eff = 0 limit; below this the
# wave is linear to machine precision but the elliptic bookkeeping still
# carries a well-defined amplitude ratio.
_P_FLOOR = 1e-12

# Quadrature resolution for g_eff; raised adaptively when the wave
# oscillates faster than the base grid resolves.
_QUAD_SAMPLES = 2049
_QUAD_SAMPLES_MAX = 131073

# The reduced matching relations carry 1/mu and 1/sqrt(2 mu) factors.
_MU_FLOOR = 1e-6


@dataclass(frozen=True)
class MatchedShellSolution:
    """A glued interior/exterior pair sharing mu and g.

    left, right      the two waves; left vanishes at x = 0
    mu, g            shared chemical potential and nonlinearity
    g_eff            g * int_0^a psi^2 dx of the interior wave
    amplitude_ratio  A_l / A_r
    x0_right         shift of the exterior wave: psi_r(x) = A_r f(alpha_r (x - x0_right))
    """

    left: PeriodicWave
    right: PeriodicWave
    mu: float
    g: float
    g_eff: float
    amplitude_ratio: float
    x0_right: float


@dataclass(frozen=True)
class Resonance:
    """One amplitude-ratio maximum and its side points.

    mu_n         peak position (parabolic refinement of the grid maximum)
    mu_less      nearest ratio = 1 crossing below the peak (NaN if off-grid)
    mu_greater   nearest ratio = 1 crossing above the peak (NaN if off-grid)
    width_fwhm   full width at half maximum above the ratio = 1 baseline
    width_delta  mu_greater - mu_less
    n            band label from the shifted free-wall estimate
    """

    n: int
    mu_n: float
    mu_less: float
    mu_greater: float
    width_fwhm: float
    width_delta: float


@dataclass(frozen=True)
class ResonanceScan:
    """Amplitude-ratio sweep at fixed effective nonlinearity.

    ratio is NaN wherever no matched solution exists; those gaps are
    meaningful (see repulsive_existence_threshold) and never abort the
    sweep.
    """

    g_eff: float
    mu_grid: np.ndarray
    ratio: np.ndarray
    resonances: list[Resonance]


def _f_cn(p: float) -> float:
    return p * (1.0 - p) / (1.0 - 2.0 * p) ** 2


def _f_cn_inv(c: float) -> float:
    # p(1-p)/(1-2p)^2 = c has the unique root below 1/2, written without
    # cancellation for small c.
    root = math.sqrt(1.0 + 4.0 * c)
    return 2.0 * c / (root * (root + 1.0))


def _f_sn(p: float) -> float:
    return p / (1.0 + p) ** 2


def _f_sn_inv(c: float) -> float:
    # p/(1+p)^2 = c, root below 1; c must lie in [0, 1/4].
    return 2.0 * c / ((1.0 - 2.0 * c) + math.sqrt(1.0 - 4.0 * c))


def left_wave_for(mu: float, g: float, p_l: float, kind: str, a: float) -> PeriodicWave:
    """Interior wave with psi(0) = 0 for the given modulus.

    The cn kind places the wall on a zero of cn by the quarter-period
    shift x0 = -L/4; the sn kind has sn(0) = 0 with no shift.  L and A
    follow from the dispersion and amplitude relations of
    make_periodic_wave.  a is validated only; the wave itself does not
    depend on the shell radius.
    """
    if a <= 0.0:
        raise ValueError("shell radius a must be positive")
    wave = make_periodic_wave(kind, p_l, mu, g, 0.0)
    if kind == CN:
        wave = replace(wave, x0=-wave.period / 4.0)
    return wave


def _g_eff_of_wave(wave: PeriodicWave, a: float) -> float:
    n = _QUAD_SAMPLES
    cycles = a / wave.period
    if cycles * 64.0 > n:
        n = min(_QUAD_SAMPLES_MAX, 2 * int(32.0 * cycles) + 1)
    xs = np.linspace(0.0, a, n)
    vals = np.asarray(wave.psi(xs)) ** 2
    return wave.g * composite_simpson(vals, xs[1] - xs[0])


def effective_nonlinearity(sol, cfg: ShellConfig) -> float:
    """g * int_0^a psi^2 dx for a matched solution or a bare interior wave."""
    wave = sol.left if isinstance(sol, MatchedShellSolution) else sol
    return _g_eff_of_wave(wave, cfg.a)


def match_at_shell(left: PeriodicWave, cfg: ShellConfig,
                   p_r: float | None = None) -> MatchedShellSolution | None:
    """Glue an exterior wave to the interior one across the shell.

    With p_r omitted, the outer modulus is solved in closed form from
    the jump in the first-integral constant; continuity then fixes the
    exterior phase up to a two-fold branch, and the branch is chosen so
    the derivative jump carries the right sign.  Both conditions are
    re-verified by direct evaluation at x = a.

    Returns None when no admissible outer modulus exists (attractive:
    negative first-integral constant; repulsive: constant beyond the
    f_sn range, the amplitude-ratio threshold of
    repulsive_existence_threshold).  A caller-supplied p_r that fails
    the direct verification also yields None.
    """
    a, lam = cfg.a, cfg.lam
    mu, g, p_l, kind = left.mu, left.g, left.p, left.kind
    if mu < _MU_FLOOR:
        raise ValueError(f"matching requires mu >= {_MU_FLOOR}")
    if p_l <= 0.0:
        return None

    u_l = left.alpha * (a - left.x0)
    sn_l, cn_l, dn_l = jacobi(u_l, p_l)
    quad = 2.0 * lam * lam / mu
    cub = 4.0 * lam / math.sqrt(2.0 * mu)
    solved_here = p_r is None
    if kind == CN:
        den = 1.0 - 2.0 * p_l
        c = (_f_cn(p_l)
             + quad * (p_l / den) * cn_l * cn_l
             - cub * (p_l / den ** 1.5) * cn_l * sn_l * dn_l)
        if solved_here:
            if c < 0.0:
                return None
            p_r = _f_cn_inv(c)
    elif kind == SN:
        den = 1.0 + p_l
        c = (_f_sn(p_l)
             + quad * (p_l / den) * sn_l * sn_l
             + cub * (p_l / den ** 1.5) * sn_l * cn_l * dn_l)
        if solved_here:
            if c < 0.0 or c > 0.25:
                return None
            p_r = _f_sn_inv(c)
    else:
        raise ValueError(f"unknown wave kind {kind!r}")
    if p_r <= 0.0 or p_r >= 1.0:
        return None

    right0 = make_periodic_wave(kind, p_r, mu, g, 0.0)
    A_r, alpha_r = right0.amplitude, right0.alpha
    K_r = complete_K(p_r)
    w = float(left.psi(a))
    s_r = float(left.dpsi(a)) + 2.0 * lam * w

    t = w / A_r
    if abs(t) > 1.0:
        if abs(t) > 1.0 + 1e-9:
            return None
        t = math.copysign(1.0, t)
    if kind == CN:
        # invert_cn lands where sn, dn >= 0, i.e. psi_r' <= 0 there.
        u_r = invert_cn(t, p_r, K_r)
        if s_r > 0.0:
            u_r = 4.0 * K_r - u_r
    else:
        # invert_sn lands where cn, dn >= 0, i.e. psi_r' >= 0 there.
        u_r = invert_sn(t, p_r, K_r)
        if s_r < 0.0:
            u_r = 2.0 * K_r - u_r
    right = replace(right0, x0=a - u_r / alpha_r)

    scale = max(abs(w), abs(s_r) / max(alpha_r, 1.0), left.amplitude, A_r)
    d1 = abs(float(right.psi(a)) - w)
    d2 = abs(float(right.dpsi(a)) - s_r)
    if d1 > 1e-8 * scale or d2 > 1e-6 * scale * max(alpha_r, 1.0):
        if solved_here:
            raise NonConvergenceError(
                f"matching verification failed: |dpsi defect| = {d2:.3e}, "
                f"|psi defect| = {d1:.3e} at mu = {mu}, p_l = {p_l}")
        return None

    ratio = left.amplitude / A_r
    if kind == CN:
        formula = math.sqrt(p_l * (1.0 - 2.0 * p_r) / ((1.0 - 2.0 * p_l) * p_r))
    else:
        formula = math.sqrt(p_l * (1.0 + p_r) / ((1.0 + p_l) * p_r))
    if abs(ratio - formula) > 1e-10 * formula:
        raise NonConvergenceError(
            f"amplitude bookkeeping inconsistent: {ratio} vs {formula}")

    return MatchedShellSolution(
        left=left, right=right, mu=mu, g=g,
        g_eff=_g_eff_of_wave(left, a),
        amplitude_ratio=ratio, x0_right=right.x0)


def _solve_p_left(mu: float, g: float, a: float, target: float, kind: str) -> float:
    """Interior modulus whose wave meets the g_eff target at fixed mu.

    g_eff is monotone in p over the bracket for the regimes scanned
    here; the endpoint sign check guards the assumption, and an
    unreachable target raises NoSolutionError (for sn waves g_eff is
    bounded, so large targets genuinely have no solution at small mu).
    """
    if target * g < 0.0:
        raise NoSolutionError(f"g_eff target {target} has the wrong sign for g = {g}")
    if target == 0.0:
        return _P_FLOOR
    p_hi = 0.5 - 1e-9 if kind == CN else 1.0 - 1e-9

    def f(p: float) -> float:
        return _g_eff_of_wave(left_wave_for(mu, g, p, kind, a), a) - target

    f_lo = f(_P_FLOOR)
    if f_lo == 0.0:
        return _P_FLOOR
    f_hi = f(p_hi)
    if f_hi == 0.0:
        return p_hi
    if f_lo * f_hi > 0.0:
        raise NoSolutionError(
            f"g_eff = {target} unreachable for kind = {kind} at mu = {mu}")
    return brentq(f, _P_FLOOR, p_hi, xtol=1e-15, rtol=1e-12)


def matched_solution_for(cfg: ShellConfig, g: float, g_eff_target: float,
                         mu: float) -> MatchedShellSolution | None:
    """One scan point: solve p_l for the g_eff target, then match.

    Returns None where either stage has no solution.
    """
    kind = CN if g < 0.0 else SN
    if g == 0.0:
        raise ValueError("g must be nonzero; use a signed g with g_eff target 0 "
                         "for the linear limit")
    try:
        p_l = _solve_p_left(mu, g, cfg.a, g_eff_target, kind)
    except NoSolutionError:
        return None
    left = left_wave_for(mu, g, p_l, kind, cfg.a)
    return match_at_shell(left, cfg)


def scan_resonances(cfg: ShellConfig, g: float, g_eff_target: float,
                    mu_range: tuple[float, float],
                    n_points: int = 2000) -> ResonanceScan:
    """Amplitude ratio over a uniform mu grid at fixed effective nonlinearity.

    Per-point failures (no p_l reaching the target, or no admissible
    outer modulus) are recorded as NaN and never abort the sweep.
    Resonances are the local maxima with ratio > 1.2; their side points
    mu_less / mu_greater are the nearest ratio = 1 crossings found by
    linear interpolation on the grid, and the FWHM is measured at
    1 + (peak - 1)/2 above the unit baseline.
    """
    lo, hi = float(mu_range[0]), float(mu_range[1])
    if not (lo < hi):
        raise ValueError("mu_range must be an increasing interval")
    if lo < _MU_FLOOR:
        raise ValueError(f"scans require mu >= {_MU_FLOOR}")
    if n_points < 2:
        raise ValueError("n_points must be at least 2")
    mus = np.linspace(lo, hi, n_points)
    ratio = np.full(n_points, math.nan)
    for i, mu in enumerate(mus):
        sol = matched_solution_for(cfg, g, g_eff_target, float(mu))
        if sol is not None:
            ratio[i] = sol.amplitude_ratio
    resonances = _locate_resonances(cfg, mus, ratio, g_eff_target)
    return ResonanceScan(g_eff=g_eff_target, mu_grid=mus, ratio=ratio,
                         resonances=resonances)


def _cross_toward(mus: np.ndarray, ratio: np.ndarray, start: int, step: int,
                  level: float) -> float:
    """First crossing of `level` walking from a point above it; NaN if lost."""
    j = start
    while 0 <= j + step < len(mus):
        k = j + step
        if math.isnan(ratio[k]):
            return math.nan
        if ratio[k] < level <= ratio[j]:
            t = (ratio[j] - level) / (ratio[j] - ratio[k])
            return float(mus[j] + t * (mus[k] - mus[j]))
        j = k
    return math.nan


def _locate_resonances(cfg: ShellConfig, mus: np.ndarray, ratio: np.ndarray,
                       g_eff: float) -> list[Resonance]:
    out: list[Resonance] = []
    for i in range(1, len(mus) - 1):
        y0, y1, y2 = ratio[i - 1], ratio[i], ratio[i + 1]
        if math.isnan(y0) or math.isnan(y1) or math.isnan(y2):
            continue
        if not (y1 > y0 and y1 >= y2 and y1 > 1.2):
            continue
        denom = y0 - 2.0 * y1 + y2
        mu_n = float(mus[i])
        if denom < 0.0:
            mu_n -= 0.5 * float(mus[i + 1] - mus[i]) * (y2 - y0) / denom
        mu_less = _cross_toward(mus, ratio, i, -1, 1.0)
        mu_greater = _cross_toward(mus, ratio, i, +1, 1.0)
        half = 1.0 + 0.5 * (y1 - 1.0)
        w_lo = _cross_toward(mus, ratio, i, -1, half)
        w_hi = _cross_toward(mus, ratio, i, +1, half)
        # band label from the shifted hard-wall estimate mu ~ n^2 pi^2/(2a^2)
        shifted = max(2.0 * (mu_n - 1.5 * g_eff / cfg.a), 0.25)
        n = max(1, round(cfg.a * math.sqrt(shifted) / math.pi))
        out.append(Resonance(
            n=n, mu_n=mu_n, mu_less=mu_less, mu_greater=mu_greater,
            width_fwhm=w_hi - w_lo, width_delta=mu_greater - mu_less))
    return out


def mu_greater_approx(cfg: ShellConfig, n: int, g_eff: float) -> float:
    """First-order position of the upper side point, n^2 pi^2/(2a^2) + 3 g_eff/(2a)."""
    if n < 1:
        raise ValueError("band index n must be >= 1")
    return n * n * math.pi * math.pi / (2.0 * cfg.a * cfg.a) + 1.5 * g_eff / cfg.a


def period_less(cfg: ShellConfig, n: int) -> float:
    """Period L_n^< of the lower side point, from tan(2 pi a/L) = -2 pi/(lam L).

    In theta = 2 pi a/L the condition reads tan(theta) = -theta/(lam a),
    with exactly one root per branch: theta in (n pi - pi/2, n pi] for
    lam > 0 and [n pi, n pi + pi/2) for lam < 0.  lam -> +-inf collapses
    the root onto theta = n pi, i.e. L -> 2a/n.
    """
    if n < 1:
        raise ValueError("band index n must be >= 1")
    a, lam = cfg.a, cfg.lam

    def h(theta: float) -> float:
        return math.tan(theta) + theta / (lam * a)

    if lam > 0.0:
        bracket = (n * math.pi - 0.5 * math.pi + 1e-9, n * math.pi)
    else:
        bracket = (n * math.pi, n * math.pi + 0.5 * math.pi - 1e-9)
    h_lo, h_hi = h(bracket[0]), h(bracket[1])
    if h_lo == 0.0:
        theta = bracket[0]
    elif h_hi == 0.0:
        theta = bracket[1]
    elif h_lo * h_hi > 0.0:
        raise NonConvergenceError(
            f"no sign change for L_{n}^< in theta bracket {bracket}")
    else:
        theta = brentq(h, bracket[0], bracket[1], xtol=1e-15, rtol=8.9e-16)
    return 2.0 * math.pi * a / theta


def mu_less_approx(cfg: ShellConfig, n: int, g_eff: float) -> float:
    """First-order position of the lower side point.

    2 pi^2/L^2 plus the g_eff shift weighted by the interior norm factor
    (1 - sin(4 pi a/L)/(4 pi a/L))^{-1}, with L = period_less(cfg, n).
    """
    L = period_less(cfg, n)
    base = 2.0 * math.pi * math.pi / (L * L)
    phi = 4.0 * math.pi * cfg.a / L
    weight = 1.0 - math.sin(phi) / phi
    return base + 1.5 * (g_eff / cfg.a) / weight


def repulsive_existence_threshold(mu: float, g_eff: float, a: float) -> float:
    """Minimum amplitude ratio supporting a repulsive matched solution.

    From (A_l/A_r)^2 >= 2 p_l/(1 + p_l) = g A_l^2/mu and the small-p
    estimate g_eff ~ g A_l^2 a/2: ratios below sqrt(2 g_eff/(a mu)) have
    no sn matching, so scan points there are expected NoSolution.
    """
    if mu <= 0.0:
        raise ValueError("threshold defined for mu > 0")
    if g_eff < 0.0:
        raise ValueError("threshold defined for repulsive g_eff >= 0")
    if a <= 0.0:
        raise ValueError("shell radius a must be positive")
    return math.sqrt(2.0 * g_eff / (a * mu))


def _ratio_at(cfg: ShellConfig, g: float, g_eff: float, mu: float) -> float:
    sol = matched_solution_for(cfg, g, g_eff, mu)
    return math.nan if sol is None else sol.amplitude_ratio


def _side_point_exact(cfg: ShellConfig, g: float, g_eff: float, n: int,
                      center: float, decreasing: bool) -> float:
    """Ratio = 1 crossing of the requested direction nearest to `center`."""
    width = max(2.5, 0.6 * abs(g_eff) / cfg.a)
    lo = max(_MU_FLOOR, center - width)
    grid = np.linspace(lo, center + width, 41)

    def h(mu: float) -> float:
        return _ratio_at(cfg, g, g_eff, float(mu)) - 1.0

    best = None
    for b_lo, b_hi in bracket_sign_changes(h, grid):
        if b_lo == b_hi:
            root = b_lo
        else:
            going_down = h(b_lo) > 0.0
            if going_down != decreasing:
                continue
            root = brentq(h, b_lo, b_hi, xtol=1e-10, rtol=8.9e-16)
        if best is None or abs(root - center) < abs(best - center):
            best = root
    if best is None:
        raise NonConvergenceError(
            f"no ratio = 1 crossing near mu = {center} for n = {n}, g_eff = {g_eff}")
    return float(best)


def mu_greater_exact(cfg: ShellConfig, g: float, g_eff: float, n: int) -> float:
    """Upper side point of band n: the ratio = 1 crossing above the peak."""
    return _side_point_exact(cfg, g, g_eff, n, mu_greater_approx(cfg, n, g_eff),
                             decreasing=True)


def mu_less_exact(cfg: ShellConfig, g: float, g_eff: float, n: int) -> float:
    """Lower side point of band n: the ratio = 1 crossing below the peak."""
    return _side_point_exact(cfg, g, g_eff, n, mu_less_approx(cfg, n, g_eff),
                             decreasing=False)
