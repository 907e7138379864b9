"""Localized states of a single delta potential with cubic nonlinearity.

Walks through the four wavefunction families the well supports, prints
the existence boundaries that separate them, and plots one profile per
family together with the chemical potential mu(lambda) = -(2 lambda + g)^2/8.

Run:  python3 demos/bound_state_families.py
"""

from __future__ import annotations

import pathlib

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from nlse_delta import ATTRACTIVE, REPULSIVE, bound_state, critical_values

OUT = pathlib.Path(__file__).with_name("bound_state_families.png")


def main() -> None:
    print("Existence boundaries (from critical_values):")
    cv_att = critical_values(-1.0, ATTRACTIVE)
    cv_rep = critical_values(1.0, REPULSIVE)
    print(f"  g = -1: bound states for lambda < {cv_att.lambda_c}, "
          f"mu -> {cv_att.mu_c} at the boundary")
    print(f"  g = +1: bound states for lambda < {cv_rep.lambda_c}")
    print("  any lambda < 0: the families meet at g_c = -2 lambda\n")

    # One representative per family.  The critical-rational case sits
    # exactly on g = -2 lambda, where the exponential tail degenerates
    # into a power law.
    cases = [
        (-1.0, -1.0, "attractive well, g = -1"),
        (0.15, -1.0, "repulsive delta, g = -1"),
        (-1.0, 1.0, "attractive well, g = +1"),
        (-0.8, 0.0, "attractive well, linear (g = 0)"),
        (-2.0 ** -0.5, 2.0 ** 0.5, "critical g = -2 lambda"),
    ]

    x = np.linspace(-6.0, 6.0, 1201)
    fig, (ax_psi, ax_mu) = plt.subplots(1, 2, figsize=(11, 4.2))

    print(f"{'lambda':>10} {'g':>8} {'family':>18} {'mu':>12} {'k':>9}")
    for lam, g, label in cases:
        state = bound_state(lam, g)
        print(f"{lam:>10.4f} {g:>8.4f} {state.family:>18} "
              f"{state.mu:>12.6f} {state.k:>9.4f}")
        ax_psi.plot(x, state.psi(x), label=f"{state.family}: {label}")
    print()

    ax_psi.set_xlabel("x")
    ax_psi.set_ylabel("psi")
    ax_psi.set_title("one normalized profile per family")
    ax_psi.legend(fontsize=8)

    # mu(lambda) for the attractive branch, ending at the fold where the
    # state delocalizes.
    for g, color in ((-1.0, "tab:blue"), (1.0, "tab:red")):
        branch = ATTRACTIVE if g < 0 else REPULSIVE
        lam_c = critical_values(0.0, branch).lambda_c
        lams = np.linspace(lam_c - 2.0, lam_c - 1e-6, 300)
        mus = [bound_state(float(l), g).mu for l in lams]
        ax_mu.plot(lams, mus, color=color, label=f"g = {g:+.0f}")
        ax_mu.axvline(lam_c, color=color, ls=":", lw=1)
    ax_mu.set_xlabel("lambda")
    ax_mu.set_ylabel("mu")
    ax_mu.set_title("mu = -(2 lambda + g)^2 / 8 up to the boundary")
    ax_mu.legend()

    fig.tight_layout()
    fig.savefig(OUT, dpi=160)
    print(f"figure saved to {OUT}")


if __name__ == "__main__":
    main()
