"""Tests for linear scattering off a delta shell inside a hard wall.

Pole anchors were frozen from a 40-digit Newton iteration on
exp(2ika) = 1 - ik/lam.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from nlse_delta.oracle import argument_principle_count, shoot
from nlse_delta.shell_linear import (
    ShellConfig,
    amplitude_ratio_linear,
    bound_state_criterion,
    find_poles,
    linear_wavefunction,
    phase_shift,
    pole_condition,
    s_matrix,
)

CFG = ShellConfig(a=1.0, lam=10.0)

# n -> k_n for a = 1, lam = 10.
POLE_ANCHORS = {
    1: complex(2.9957751761809766, -0.020542952649143441),
    2: complex(6.0109231078752704, -0.074375699643635513),
    3: complex(9.0532507723325992, -0.14565101387567963),
}
ENERGY_ANCHORS = {
    1: complex(4.4871234466593081, -0.061542067591765152),
    2: complex(18.06283243204571, -0.44706661165231922),
    3: complex(40.970067664448895, -1.3186151538610228),
}


def test_config_validation():
    with pytest.raises(ValueError):
        ShellConfig(a=0.0, lam=1.0)
    with pytest.raises(ValueError):
        ShellConfig(a=-2.0, lam=1.0)
    with pytest.raises(ValueError):
        ShellConfig(a=1.0, lam=math.inf)
    ShellConfig(a=1.0, lam=0.0)  # transparent shell is legal


def test_wavefunction_continuity_and_jump():
    k = 2.3
    a = CFG.a
    eps = 1e-9
    inner = linear_wavefunction(CFG, k, a - eps)
    outer = linear_wavefunction(CFG, k, a + eps)
    assert outer == pytest.approx(inner, abs=1e-7)
    h = 1e-6
    left = (linear_wavefunction(CFG, k, a - h) -
            linear_wavefunction(CFG, k, a - 3.0 * h)) / (2.0 * h)
    right = (linear_wavefunction(CFG, k, a + 3.0 * h) -
             linear_wavefunction(CFG, k, a + h)) / (2.0 * h)
    jump = right - left
    assert jump == pytest.approx(2.0 * CFG.lam *
                                 linear_wavefunction(CFG, k, a), rel=1e-4)


def test_wavefunction_domain():
    with pytest.raises(ValueError):
        linear_wavefunction(CFG, -1.0, 0.5)
    with pytest.raises(ValueError):
        linear_wavefunction(CFG, 2.0, -0.1)


def test_wavefunction_against_integration():
    k = 2.0
    result = shoot(0.5 * k * k, 0.0, [(CFG.a, CFG.lam)], 3.0, 0.0, k, h=1e-4)
    exact = linear_wavefunction(CFG, k, result.x)
    assert np.max(np.abs(result.psi - exact)) < 1e-8


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pole_anchors(n):
    poles = {p.n: p for p in find_poles(CFG, 3) if p.kind == "resonance"}
    assert abs(poles[n].k - POLE_ANCHORS[n]) < 1e-10
    assert abs(poles[n].energy - ENERGY_ANCHORS[n]) < 1e-9
    assert poles[n].E == pytest.approx(ENERGY_ANCHORS[n].real, rel=1e-12)
    assert poles[n].Gamma == pytest.approx(-2.0 * ENERGY_ANCHORS[n].imag,
                                           rel=1e-10)


def test_pole_condition_residuals():
    for p in find_poles(CFG, 3):
        assert abs(pole_condition(CFG, p.k)) < 1e-12


def test_pole_count_against_winding_number():
    poles = find_poles(CFG, 3)
    count = argument_principle_count(lambda k: pole_condition(CFG, k),
                                     0.05, 12.0, -3.0, -1e-4, n_samples=6000)
    assert count == sum(1 for p in poles if p.kind == "resonance")


def test_bound_root_anchor():
    # a = 1, lam = -1: kappa solves exp(-2 kappa) = 1 - kappa.
    poles = find_poles(ShellConfig(a=1.0, lam=-1.0), 0)
    assert len(poles) == 1
    assert poles[0].kind == "bound"
    assert poles[0].k.imag == pytest.approx(0.79681213002002005, rel=1e-12)
    assert poles[0].E == pytest.approx(-0.31745478527352067, rel=1e-12)


def test_virtual_root_anchor():
    poles = find_poles(ShellConfig(a=1.0, lam=-0.4), 0)
    assert len(poles) == 1
    assert poles[0].kind == "virtual"
    assert -poles[0].k.imag == pytest.approx(0.21542110489212952, rel=1e-12)


def test_bound_virtual_exchange():
    """The imaginary-axis root crosses the origin at lam a = -1/2."""
    below = find_poles(ShellConfig(a=1.0, lam=-0.5001), 0)
    above = find_poles(ShellConfig(a=1.0, lam=-0.4999), 0)
    assert below[0].kind == "bound"
    assert above[0].kind == "virtual"
    assert abs(below[0].k.imag) < 1e-3
    assert abs(above[0].k.imag) < 1e-3
    # Exactly at the exchange the root sits at k = 0 and is dropped.
    assert find_poles(ShellConfig(a=1.0, lam=-0.5), 0) == []


def test_deeply_bound_shell():
    # Strong attraction: kappa -> |lam| exponentially fast in a |lam|.
    poles = find_poles(ShellConfig(a=50.0, lam=-1.0), 0)
    assert len(poles) == 1
    assert poles[0].kind == "bound"
    assert poles[0].k.imag == pytest.approx(1.0, abs=1e-15)


def test_bound_state_criterion_reports_quoted_inequality():
    """The quoted inequality 'lam a > -1/2' is reported verbatim, yet the
    actual bound root exists exactly when it is False."""
    attractive = ShellConfig(a=1.0, lam=-1.0)
    weak = ShellConfig(a=1.0, lam=-0.4)
    assert bound_state_criterion(attractive) is False
    assert any(p.kind == "bound" for p in find_poles(attractive, 0))
    assert bound_state_criterion(weak) is True
    assert not any(p.kind == "bound" for p in find_poles(weak, 0))


def test_repulsive_shell_has_no_axis_roots():
    poles = find_poles(CFG, 2)
    assert all(p.kind == "resonance" for p in poles)


def test_find_poles_validation():
    with pytest.raises(ValueError):
        find_poles(CFG, -1)
    assert find_poles(ShellConfig(a=1.0, lam=0.0), 5) == []


def test_s_matrix_unitarity():
    for k in np.linspace(0.3, 12.0, 40):
        assert abs(abs(s_matrix(CFG, float(k))) - 1.0) < 1e-12


def test_s_matrix_reflection_identities():
    for k in (1.7 - 0.3j, 4.0 + 0.1j, 0.5 - 1.2j):
        s = s_matrix(CFG, k)
        assert abs(s_matrix(CFG, -k) - 1.0 / s) < 1e-10 * abs(1.0 / s)
        assert abs(s_matrix(CFG, k.conjugate()) -
                   (1.0 / s).conjugate()) < 1e-10 * abs(1.0 / s)


def test_s_matrix_pole_zero_structure():
    k1 = POLE_ANCHORS[1]
    assert abs(s_matrix(CFG, k1)) > 1e10           # pole
    assert abs(s_matrix(CFG, -k1.conjugate())) > 1e10
    assert abs(s_matrix(CFG, k1.conjugate())) < 1e-10  # matching zero
    assert abs(s_matrix(CFG, -k1)) < 1e-10


def test_phase_shift_scalar_and_array():
    ks = np.linspace(0.5, 4.0, 301)
    scan = phase_shift(CFG, ks)
    assert isinstance(phase_shift(CFG, 1.0), float)
    # The scalar principal value agrees with the scan modulo pi.
    d = phase_shift(CFG, float(ks[0])) - scan[0]
    assert d == pytest.approx(math.pi * round(d / math.pi), abs=1e-12)
    with pytest.raises(ValueError):
        phase_shift(CFG, 0.0)
    with pytest.raises(ValueError):
        phase_shift(ShellConfig(a=1.0, lam=0.0), 1.0)


def test_phase_shift_resonant_slope():
    """At Re k_1 the phase rises with slope 1/|Im k_1| from the pole pair
    of S, on top of the hard-sphere background slope -a."""
    k1 = POLE_ANCHORS[1]
    h = 1e-4
    ks = np.array([k1.real - h, k1.real + h])
    scan = phase_shift(CFG, ks)
    slope = (scan[1] - scan[0]) / (2.0 * h)
    assert slope == pytest.approx(1.0 / abs(k1.imag) - CFG.a, rel=0.02)


def test_phase_shift_hard_sphere_limit():
    # tan delta -> (cos 2ka - 1)/sin 2ka = -tan(ka); the numerator is
    # never positive, so the principal value lives in [-pi, 0].
    hard = ShellConfig(a=1.0, lam=1e8)
    for k in (0.7, 2.2, 3.9):
        delta = phase_shift(hard, k)
        expected = -math.fmod(k * hard.a, math.pi)
        assert delta == pytest.approx(expected, abs=1e-6)


def test_amplitude_ratio_peaks_at_resonances():
    E = np.linspace(0.2, 30.0, 3000)
    ratio = amplitude_ratio_linear(CFG, E)
    i1 = int(np.argmax(ratio * (E < 10.0)))
    assert E[i1] == pytest.approx(ENERGY_ANCHORS[1].real, abs=0.05)
    assert ratio[i1] > 5.0
    # Off resonance the interior is suppressed by the strong shell.
    at_ten = amplitude_ratio_linear(CFG, 10.0)
    assert at_ten < 0.5


def test_amplitude_ratio_transparent_shell():
    flat = amplitude_ratio_linear(ShellConfig(a=1.0, lam=0.0),
                                  np.linspace(0.5, 40.0, 11))
    assert np.max(np.abs(flat - 1.0)) == 0.0
