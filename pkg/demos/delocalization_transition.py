"""The bound -> delocalized transition of the attractive-nonlinearity well.

For g = -1 the localized state exists only below lambda_c = 1/4.  Just
above it the solution continues as a periodic wave, and two diagnostics
track the handover: the matching point x0 grows without bound as lambda
approaches 1/4 from either side, and the norm carried by one period of
the wave tends to 1 there — the delocalized state sheds exactly one
normalized atom per cell at the point where the bound state is reborn.
This demo tabulates both diagnostics across the transition and plots
profiles on either side.

Run:  python3 demos/delocalization_transition.py
"""

from __future__ import annotations

import pathlib

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from nlse_delta import (
    LAMBDA_C_ATTRACTIVE,
    bound_state,
    bright_scattering_state,
    transition_diagnostics,
)

OUT = pathlib.Path(__file__).with_name("delocalization_transition.png")


def main() -> None:
    lam_c = LAMBDA_C_ATTRACTIVE
    print(f"g = -1 localized states end at lambda_c = {lam_c}\n")

    print(f"{'lambda':>8} {'x0':>12} {'norm/period':>12}")
    lams = [0.20, 0.22, 0.24, 0.249, 0.251, 0.26, 0.28, 0.30]
    x0s, norms = [], []
    for lam in lams:
        diag = transition_diagnostics(lam)
        x0s.append(diag.x0)
        norms.append(diag.norm_per_period)
        print(f"{lam:>8.3f} {diag.x0:>12.5f} {diag.norm_per_period:>12.6f}")
    print("\nx0 diverges as lambda approaches 1/4 from either side, "
          "while the norm per\nperiod closes in on 1 from below as "
          "lambda drops back toward 1/4.")

    fig, axes = plt.subplots(1, 3, figsize=(13, 4))

    grid = np.linspace(0.2, 0.3, 201)
    diag_x0 = [transition_diagnostics(float(l)).x0
               for l in grid if abs(l - lam_c) > 1e-9]
    diag_norm = [transition_diagnostics(float(l)).norm_per_period
                 for l in grid if abs(l - lam_c) > 1e-9]
    shown = [l for l in grid if abs(l - lam_c) > 1e-9]
    axes[0].plot(shown, diag_x0)
    axes[0].axvline(lam_c, color="k", ls=":", lw=1)
    axes[0].set_xlabel("lambda")
    axes[0].set_title("matching point x0")
    axes[1].plot(shown, diag_norm)
    axes[1].axvline(lam_c, color="k", ls=":", lw=1)
    axes[1].axhline(1.0, color="k", lw=0.5)
    axes[1].set_xlabel("lambda")
    axes[1].set_title("norm per period")

    x = np.linspace(0.0, 12.0, 2401)
    below = bound_state(0.24, -1.0)
    axes[2].plot(x, below.psi(x), label="lambda = 0.24 (bound)")
    above = bright_scattering_state(0.26)
    axes[2].plot(x, above.psi(x), label="lambda = 0.26 (periodic)")
    axes[2].set_xlabel("x")
    axes[2].set_title("profiles either side of lambda_c")
    axes[2].legend(fontsize=8)

    fig.tight_layout()
    fig.savefig(OUT, dpi=160)
    print(f"\nfigure saved to {OUT}")


if __name__ == "__main__":
    main()
