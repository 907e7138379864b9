"""Tests for the shared solution containers."""

from __future__ import annotations

import math

import numpy as np
import pytest

from nlse_delta.elliptic import complete_K
from nlse_delta.oracle import adaptive_simpson
from nlse_delta.states import (
    CN,
    SN,
    PeriodicWave,
    SolitonState,
    make_periodic_wave,
)
from nlse_delta.delta_well import bound_state


def _fd_slope(fn, x, h=1e-6):
    return (fn(x + h) - fn(x - h)) / (2.0 * h)


@pytest.mark.parametrize("lam, g", [(-1.0, -1.0), (0.1, -1.0), (-1.0, 1.0),
                                    (-0.7, 0.0), (-0.5, 1.0)])
def test_soliton_derivative_consistency(lam, g):
    state = bound_state(lam, g)
    for x in (0.4, 1.3, -2.1):
        assert state.dpsi(x) == pytest.approx(_fd_slope(state.psi, x),
                                              rel=1e-7, abs=1e-10)


def test_soliton_symmetry():
    state = bound_state(0.15, -1.0)
    x = np.linspace(0.1, 4.0, 17)
    assert np.allclose(state.psi(x), state.psi(-x), rtol=0, atol=1e-15)
    assert np.allclose(state.dpsi(x), -state.dpsi(-x), rtol=0, atol=1e-15)


def test_soliton_normalization():
    for lam, g in [(-1.0, -1.0), (0.2, -1.0), (-1.0, 1.0)]:
        state = bound_state(lam, g)
        span = 50.0 / state.k
        norm = 2.0 * adaptive_simpson(lambda t: state.psi(t) ** 2, 0.0, span,
                                      tol=1e-12)
        assert norm == pytest.approx(1.0, abs=1e-9)


def test_soliton_scalar_vs_array():
    state = bound_state(-0.4, -1.0)
    xs = np.array([0.0, 0.7, 2.0])
    arr = state.psi(xs)
    assert isinstance(state.psi(0.7), float)
    assert state.psi(0.7) == arr[1]


def test_unknown_family_rejected():
    bad = SolitonState(mu=-0.5, k=1.0, x0=0.0, lam=-1.0, g=-1.0,
                       family="nope")
    with pytest.raises(ValueError):
        bad.psi(0.3)


@pytest.mark.parametrize("kind, g, factor", [(CN, -1.0, -1.0), (SN, 1.0, 1.0)])
def test_periodic_wave_dispersion(kind, g, factor):
    """L, A and alpha must satisfy the dispersion relations
    mu = 8 (1 -/+ 2p) K^2 / L^2 and A = 4 sqrt(p) K / (sqrt|g| L)."""
    p, mu = 0.3, 5.0
    wave = make_periodic_wave(kind, p, mu, g, x0=0.0)
    K = complete_K(p)
    fac = 1.0 - 2.0 * p if kind == CN else 1.0 + p
    assert mu == pytest.approx(8.0 * fac * K**2 / wave.period**2, rel=1e-13)
    assert wave.amplitude == pytest.approx(
        4.0 * math.sqrt(p) * K / (math.sqrt(abs(g)) * wave.period), rel=1e-13)
    assert wave.alpha == pytest.approx(4.0 * K / wave.period, rel=1e-13)


def test_periodic_wave_profile_and_slope():
    wave = make_periodic_wave(CN, 0.4, 3.0, -1.0, x0=0.5)
    assert wave.psi(0.5) == pytest.approx(wave.amplitude, rel=1e-14)
    for x in (0.0, 0.9, 1.7):
        assert wave.dpsi(x) == pytest.approx(_fd_slope(wave.psi, x),
                                             rel=1e-6, abs=1e-9)
    sn_wave = make_periodic_wave(SN, 0.2, 4.0, 1.0, x0=0.0)
    assert sn_wave.psi(0.0) == pytest.approx(0.0, abs=1e-15)
    assert sn_wave.dpsi(0.0) > 0.0
    for x in (0.3, 1.1):
        assert sn_wave.dpsi(x) == pytest.approx(_fd_slope(sn_wave.psi, x),
                                                rel=1e-6, abs=1e-9)


def test_periodic_wave_periodicity():
    wave = make_periodic_wave(SN, 0.6, 2.0, 1.0, x0=0.2)
    x = np.linspace(-1.0, 1.0, 11)
    assert np.allclose(wave.psi(x), wave.psi(x + wave.period), atol=1e-11)


def test_make_periodic_wave_validation():
    with pytest.raises(ValueError):
        make_periodic_wave(CN, 0.3, 5.0, 1.0, 0.0)   # cn needs g < 0
    with pytest.raises(ValueError):
        make_periodic_wave(SN, 0.3, 5.0, -1.0, 0.0)  # sn needs g > 0
    with pytest.raises(ValueError):
        make_periodic_wave(SN, 0.3, -5.0, 1.0, 0.0)  # sn needs mu > 0
    with pytest.raises(ValueError):
        make_periodic_wave(CN, 1.2, 5.0, -1.0, 0.0)  # p out of range
    with pytest.raises(ValueError):
        make_periodic_wave("zz", 0.3, 5.0, -1.0, 0.0)


def test_cn_wave_negative_mu_needs_large_p():
    # For p > 1/2 the cn branch carries mu < 0 (the bound-side sign).
    wave = make_periodic_wave(CN, 0.8, -1.0, -1.0, x0=0.0)
    assert wave.period > 0.0
    K = complete_K(0.8)
    assert -1.0 == pytest.approx(8.0 * (1.0 - 1.6) * K**2 / wave.period**2,
                                 rel=1e-13)
