"""Tests for the single delta well: bound states, critical behaviour,
and the continuation into periodic scattering states.

Frozen reference values come from closed forms evaluated at 40-digit
precision and from a 40-digit refinement of the two matching equations
of the periodic continuation.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from nlse_delta.delta_well import (
    ATTRACTIVE,
    LAMBDA_C_ATTRACTIVE,
    LAMBDA_C_REPULSIVE,
    REPULSIVE,
    bound_state,
    bright_scattering_state,
    critical_values,
    critical_wavefunction,
    dark_soliton,
    matching_defect,
    norm_per_period,
    transition_diagnostics,
)
from nlse_delta.oracle import adaptive_simpson, nlse_residual
from nlse_delta.states import (
    BRIGHT_SECH,
    COSECH,
    CRITICAL_RATIONAL,
    LINEAR_EXP,
)

# (lam, g) -> (family, mu, k, x0); x0 = nan where it has no meaning.
BOUND_ANCHORS = [
    (-1.0, -1.0, BRIGHT_SECH, -1.125, 1.5, -0.53647930414470012),
    (0.1, -1.0, BRIGHT_SECH, -0.08, 0.4, 0.63853202970748835),
    (-1.0, 1.0, COSECH, -0.125, 0.5, -1.0986122886681097),
    (-0.7, 0.0, LINEAR_EXP, -0.245, 0.7, math.nan),
]

# lam -> (p, x0, L, norm per period) for the g = -1 continuation.
SCATTERING_ANCHORS = {
    0.251: (0.99948053607118977, 11.019915905590111, 82.980031390485785,
            0.99505077125115363),
    0.26: (0.94880942908647632, 5.9447869419148934, 45.74507527242193,
           0.92544897267549498),
    0.30: (0.63608276348795434, 2.0798177021291177, 20.76957593605459,
           0.84974965533458925),
}


@pytest.mark.parametrize("lam, g, family, mu, k, x0", BOUND_ANCHORS)
def test_bound_state_anchors(lam, g, family, mu, k, x0):
    state = bound_state(lam, g)
    assert state.family == family
    assert state.mu == pytest.approx(mu, rel=1e-15)
    assert state.k == pytest.approx(k, rel=1e-15)
    if math.isnan(x0):
        assert math.isnan(state.x0)
    else:
        assert state.x0 == pytest.approx(x0, rel=1e-14)


def test_mu_closed_form():
    # mu = -(2 lam + g)^2 / 8 wherever a state exists with k > 0.
    for lam, g in [(-0.8, -1.0), (0.2, -1.0), (-1.5, 2.0), (-0.3, 0.4)]:
        state = bound_state(lam, g)
        assert state is not None
        assert state.mu == pytest.approx(-((2.0 * lam + g) ** 2) / 8.0,
                                         rel=1e-14)


def test_matching_condition_and_residual():
    for lam, g in [(-0.6, -1.0), (0.15, -1.0), (-0.9, 1.0), (-0.4, 0.0)]:
        state = bound_state(lam, g)
        eps = 1e-7
        defect = matching_defect(state.dpsi(-eps), state.dpsi(eps),
                                 state.psi(0.0), lam)
        assert abs(defect) < 1e-5
        x = np.linspace(-2.0, 2.0, 40001)
        report = nlse_residual(x, state.psi(x), state.mu, g,
                               deltas=[(0.0, lam)])
        assert report.max_residual < 1e-5


def test_existence_boundary_attractive():
    """g = -1: states exist for lam < 1/4 and vanish beyond."""
    eps = 1e-10
    assert bound_state(LAMBDA_C_ATTRACTIVE - eps, -1.0) is not None
    assert bound_state(LAMBDA_C_ATTRACTIVE + eps, -1.0) is None
    # General-|g| version of the same boundary: lam < |g|/4.
    assert bound_state(0.5 - eps, -2.0) is not None
    assert bound_state(0.5 + eps, -2.0) is None


def test_existence_boundary_repulsive():
    """g = +1: states exist for lam < -1/2."""
    eps = 1e-10
    assert bound_state(LAMBDA_C_REPULSIVE - eps, 1.0) is not None
    assert bound_state(LAMBDA_C_REPULSIVE + eps, 1.0) is None


def test_existence_boundary_in_g():
    """Fixed lam < 0: the repulsive branch dies at g = -2 lam, where the
    k -> 0 rational state survives as the boundary case."""
    lam = -0.5
    eps = 1e-10
    assert bound_state(lam, 1.0 - eps).family == COSECH
    assert bound_state(lam, 1.0 + eps) is None
    boundary = bound_state(lam, 1.0)
    assert boundary.family == CRITICAL_RATIONAL
    assert boundary.mu == 0.0
    assert boundary.k == 0.0


def test_linear_branch():
    eps = 1e-10
    assert bound_state(-eps, 0.0) is not None
    assert bound_state(0.0, 0.0) is None
    assert bound_state(eps, 0.0) is None


def test_critical_rational_state_properties():
    state = bound_state(-0.5, 1.0)
    # Solves the mu = 0 equation: psi''/2 = g psi^3 away from the delta.
    for x in (0.5, 1.5, 3.0):
        h = 1e-5
        d2 = (state.psi(x + h) - 2.0 * state.psi(x) + state.psi(x - h)) / h**2
        assert 0.5 * d2 == pytest.approx(state.psi(x) ** 3, rel=1e-5)
    # Normalized despite the slow 1/x tail.
    norm = 2.0 * adaptive_simpson(lambda t: state.psi(t) ** 2, 0.0, 1e6,
                                  tol=1e-12)
    assert norm == pytest.approx(1.0, abs=1e-5)
    # Matching at the delta.
    eps = 1e-7
    defect = matching_defect(state.dpsi(-eps), state.dpsi(eps),
                             state.psi(0.0), -0.5)
    assert abs(defect) < 1e-5


def test_critical_values_branches():
    cv = critical_values(-0.3, ATTRACTIVE)
    assert cv.lambda_c == 0.25
    assert cv.mu_c == -1.0 / 32.0
    assert cv.g_c == pytest.approx(0.6)
    cv = critical_values(-0.3, REPULSIVE)
    assert cv.lambda_c == -0.5
    assert cv.mu_c == 0.0
    with pytest.raises(ValueError):
        critical_values(0.0, "sideways")


def test_critical_wavefunction_printed_form():
    """The quoted closed form sqrt(-lam)/(|x| - 2 lam) is normalized for
    every lam < 0 but solves the mu = 0 equation only at lam = -1/sqrt(2);
    both facts are checked."""
    for lam in (-0.4, -1.0 / math.sqrt(2.0), -1.3):
        norm = 2.0 * adaptive_simpson(
            lambda t: critical_wavefunction(lam, t) ** 2, 0.0, 1e6, tol=1e-12)
        assert norm == pytest.approx(1.0, abs=1e-5)

    def mu_zero_defect(lam, x=1.0, h=1e-5):
        # Critical nonlinearity g = -2 lam accompanies the profile.
        f = lambda t: critical_wavefunction(lam, t)
        d2 = (f(x + h) - 2.0 * f(x) + f(x - h)) / h**2
        return 0.5 * d2 - (-2.0 * lam) * f(x) ** 3

    assert abs(mu_zero_defect(-1.0 / math.sqrt(2.0))) < 1e-6
    assert abs(mu_zero_defect(-0.4)) > 1e-3


def test_scattering_state_anchors():
    for lam, (p, x0, period, norm) in SCATTERING_ANCHORS.items():
        wave = bright_scattering_state(lam)
        assert wave.p == pytest.approx(p, rel=1e-13)
        assert wave.x0 == pytest.approx(x0, rel=1e-11)
        assert wave.period == pytest.approx(period, rel=1e-11)
        assert norm_per_period(wave) == pytest.approx(norm, abs=1e-9)


def test_scattering_state_matching():
    for lam in (0.26, 0.35, 0.45):
        wave = bright_scattering_state(lam)
        psi0 = math.sqrt(lam - 0.25)
        assert wave.psi(0.0) == pytest.approx(psi0, rel=1e-10)
        # Even continuation: psi'(0+) = lam psi(0).
        assert wave.dpsi(0.0) == pytest.approx(lam * psi0, rel=1e-8)
        x = np.linspace(0.05, 0.05 + 2.0, 20001)
        report = nlse_residual(x, wave.psi(x), wave.mu, wave.g, deltas=[])
        assert report.max_residual < 1e-5


def test_scattering_state_domain():
    with pytest.raises(ValueError):
        bright_scattering_state(0.25)
    with pytest.raises(ValueError):
        bright_scattering_state(0.1)


def test_transition_diagnostics_anchors():
    below = transition_diagnostics(0.2499)
    above = transition_diagnostics(0.2501)
    assert below.x0 == pytest.approx(15.641835287597545, rel=1e-12)
    assert below.norm_per_period == 1.0
    assert above.x0 == pytest.approx(15.647902585690347, rel=1e-9)
    with pytest.raises(ValueError):
        transition_diagnostics(0.25)


def test_transition_norm_approaches_unity():
    norms = [transition_diagnostics(lam).norm_per_period
             for lam in (0.30, 0.26, 0.251)]
    defects = [abs(1.0 - v) for v in norms]
    assert defects[0] > defects[1] > defects[2]
    assert defects[2] < 0.05


def test_dark_soliton_center():
    assert dark_soliton(2.0, -3.0) == 0.0
    assert dark_soliton(0.5, 10.0) == 0.0
    with pytest.raises(ValueError):
        dark_soliton(-1.0, 1.0)


def test_bound_state_rejects_nonfinite():
    with pytest.raises(ValueError):
        bound_state(math.nan, -1.0)
    with pytest.raises(ValueError):
        bound_state(0.0, math.inf)
