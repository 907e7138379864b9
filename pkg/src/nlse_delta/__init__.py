"""Stationary states of the 1D nonlinear Schroedinger equation with delta potentials.

Subpackages
-----------
elliptic        Jacobi elliptic functions and K(p) (AGM / Landen kernel).
states          Shared solution containers (solitons, periodic waves).
delta_well      Single delta potential: bound states, critical behaviour,
                and the bound-to-scattering transition.
shell_linear    Linear delta-shell: phase shifts, S-matrix, pole hunting.
shell_nonlinear Delta-shell with a nonlinear interior: matched elliptic
                waves and resonance scans.
oracle          Independent verification tools (finite differences,
                shooting, quadrature, argument-principle counting).
cli             Command line interface (`nlse-delta`).

Units: hbar = m = 1 throughout; the stationary equation solved is
(-1/2 d^2/dx^2 + V(x) + g |psi|^2) psi = mu psi with V built from
delta functions, whose strength lambda enters through the slope jump
psi'(x0+) - psi'(x0-) = 2 lambda psi(x0).
"""

from .delta_well import (
    ATTRACTIVE,
    LAMBDA_C_ATTRACTIVE,
    LAMBDA_C_REPULSIVE,
    REPULSIVE,
    CriticalValues,
    TransitionDiagnostics,
    bound_state,
    bright_scattering_state,
    critical_values,
    critical_wavefunction,
    dark_soliton,
    matching_defect,
    norm_per_period,
    transition_diagnostics,
)
from .elliptic import JacobiTriple, complete_K, jacobi
from .oracle import (
    BlowupError,
    ContourTooClose,
    ResidualReport,
    ShootResult,
    adaptive_simpson,
    argument_principle_count,
    composite_simpson,
    nlse_residual,
    shoot,
)
from .shell_linear import (
    ShellConfig,
    ShellPole,
    amplitude_ratio_linear,
    bound_state_criterion,
    find_poles,
    linear_wavefunction,
    phase_shift,
    pole_condition,
    s_matrix,
)
from .shell_nonlinear import (
    MatchedShellSolution,
    Resonance,
    ResonanceScan,
    effective_nonlinearity,
    left_wave_for,
    match_at_shell,
    matched_solution_for,
    mu_greater_approx,
    mu_greater_exact,
    mu_less_approx,
    mu_less_exact,
    period_less,
    repulsive_existence_threshold,
    scan_resonances,
)
from .states import (
    BRIGHT_SECH,
    CN,
    COSECH,
    CRITICAL_RATIONAL,
    LINEAR_EXP,
    SN,
    PeriodicWave,
    SolitonState,
    make_periodic_wave,
)
from ._util import NonConvergenceError, NoSolutionError

__version__ = "0.1.0"

__all__ = [
    "ATTRACTIVE",
    "BRIGHT_SECH",
    "BlowupError",
    "CN",
    "COSECH",
    "CRITICAL_RATIONAL",
    "ContourTooClose",
    "CriticalValues",
    "JacobiTriple",
    "LAMBDA_C_ATTRACTIVE",
    "LAMBDA_C_REPULSIVE",
    "LINEAR_EXP",
    "MatchedShellSolution",
    "NonConvergenceError",
    "NoSolutionError",
    "PeriodicWave",
    "REPULSIVE",
    "ResidualReport",
    "Resonance",
    "ResonanceScan",
    "SN",
    "ShellConfig",
    "ShellPole",
    "ShootResult",
    "SolitonState",
    "TransitionDiagnostics",
    "adaptive_simpson",
    "amplitude_ratio_linear",
    "argument_principle_count",
    "bound_state",
    "bound_state_criterion",
    "bright_scattering_state",
    "complete_K",
    "composite_simpson",
    "critical_values",
    "critical_wavefunction",
    "dark_soliton",
    "effective_nonlinearity",
    "find_poles",
    "jacobi",
    "left_wave_for",
    "linear_wavefunction",
    "make_periodic_wave",
    "match_at_shell",
    "matched_solution_for",
    "matching_defect",
    "mu_greater_approx",
    "mu_greater_exact",
    "mu_less_approx",
    "mu_less_exact",
    "nlse_residual",
    "norm_per_period",
    "period_less",
    "phase_shift",
    "pole_condition",
    "repulsive_existence_threshold",
    "s_matrix",
    "scan_resonances",
    "shoot",
    "transition_diagnostics",
    "__version__",
]
