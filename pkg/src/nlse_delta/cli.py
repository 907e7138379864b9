"""Command-line interface: figure-quality data emission for every solver.

Five subcommands mirror the physics modules:

    bound-state   localized states of the single delta well
    transition    x0 and norm per period across the delocalization point
    shell-linear  S-matrix poles and amplitude ratios of the linear shell
    shell-scan    nonlinear shell resonance scans at fixed g_eff
    verify        self-contained oracle suite (exit 3 on any failure)

Output is CSV (sections separated by blank lines, each with its own
header row; floats at 17 significant digits, round-trip exact) or a
JSON mirror of the same sections.  Identical invocations produce
byte-identical output.  Missing values (no solution at a grid point)
are empty CSV cells and JSON nulls.

Exit codes: 0 success, 2 invalid parameters, 3 non-convergence or a
failed verification / spot check, 4 no-solution domain under --strict.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import delta_well, elliptic, oracle, shell_linear, shell_nonlinear
from ._util import NonConvergenceError, NoSolutionError
from .states import LINEAR_EXP, PeriodicWave, make_periodic_wave

__all__ = ["RunConfig", "main"]

_FLOAT_FMT = "%.17g"

EXIT_OK = 0
EXIT_BAD_PARAMS = 2
EXIT_NO_CONVERGENCE = 3
EXIT_NO_SOLUTION = 4


# ---------------------------------------------------------------------------
# Output plumbing


@dataclass(frozen=True)
class RunConfig:
    """One fully-specified invocation: command, validated parameters,
    and where/how the sections get written."""

    command: str
    parameters: dict
    output_format: str = "csv"
    output_path: str | None = None


@dataclass
class Section:
    name: str
    columns: list[str]
    rows: list[list] = field(default_factory=list)


def _clean(value):
    """Normalize a cell: numpy scalars to python, NaN to None."""
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    f = float(value)
    return None if math.isnan(f) else f


def _cell(value) -> str:
    value = _clean(value)
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return _FLOAT_FMT % value


def _param_text(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return ",".join(_param_text(v) for v in value)
    return _FLOAT_FMT % float(value)


def _render_csv(cfg: RunConfig, sections: list[Section]) -> str:
    lines = [f"# nlse-delta {cfg.command}"]
    params = " ".join(f"{k}={_param_text(v)}"
                      for k, v in sorted(cfg.parameters.items()))
    lines.append(f"# parameters: {params}")
    for sec in sections:
        lines.append("")
        lines.append(f"# section: {sec.name}")
        lines.append(",".join(sec.columns))
        for row in sec.rows:
            lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _render_json(cfg: RunConfig, sections: list[Section]) -> str:
    doc = {
        "command": cfg.command,
        "parameters": {k: _clean(v) if not isinstance(v, (list, tuple, str))
                       else v
                       for k, v in sorted(cfg.parameters.items())},
        "sections": [
            {"name": sec.name,
             "columns": sec.columns,
             "rows": [[_clean(v) for v in row] for row in sec.rows]}
            for sec in sections
        ],
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _emit(cfg: RunConfig, sections: list[Section]) -> None:
    text = (_render_json(cfg, sections) if cfg.output_format == "json"
            else _render_csv(cfg, sections))
    if cfg.output_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(cfg.output_path, "w", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# Oracle spot checks (--check): every ~100th emitted solution row gets a
# local finite-difference residual test against the stationary equation.


def _stencil_residual(psi_fn, center: float, mu: float, g: float) -> float:
    h = 1e-4
    x = center + h * np.arange(-5.0, 6.0)
    psi = psi_fn(x)
    report = oracle.nlse_residual(x, psi, mu, g, deltas=[])
    scale = max(1.0, abs(mu) * float(np.max(np.abs(psi))),
                abs(g) * float(np.max(np.abs(psi)) ** 3))
    return report.max_residual / scale


def _spot_indices(n_rows: int) -> range:
    return range(0, n_rows, 100)


def _run_checks(checks: list) -> list[str]:
    """Each check is (label, thunk, threshold); thunk() -> error."""
    failures = []
    for label, thunk, threshold in checks:
        err = thunk()
        if not err < threshold:
            failures.append(f"{label}: residual {err:.3e} >= {threshold:g}")
    return failures


# ---------------------------------------------------------------------------
# bound-state


def _cmd_bound_state(args) -> int:
    lam, g = args.lam, args.g
    if not (math.isfinite(lam) and math.isfinite(g)):
        raise ValueError("lambda and g must be finite")
    if not (args.window > 0.0 and args.grid >= 2):
        raise ValueError("window must be positive and grid >= 2")
    cfg = RunConfig("bound-state",
                    {"lambda": lam, "g": g, "window": args.window,
                     "grid": args.grid},
                    args.format, args.out)

    state = delta_well.bound_state(lam, g)
    sections = []
    if state is None:
        if g < 0.0:
            cv = delta_well.critical_values(lam, delta_well.ATTRACTIVE)
            lambda_c, mu_c = cv.lambda_c * abs(g), cv.mu_c * g * g
        elif g > 0.0:
            cv = delta_well.critical_values(lam, delta_well.REPULSIVE)
            lambda_c, mu_c = cv.lambda_c * g, cv.mu_c
        else:
            lambda_c, mu_c = 0.0, 0.0
        summary = Section("summary",
                          ["status", "lambda", "g", "lambda_c", "mu_c", "g_c"])
        summary.rows.append(["NoBoundState", lam, g, lambda_c, mu_c,
                             -2.0 * lam])
        sections.append(summary)
        _emit(cfg, sections)
        print(f"NoBoundState: no localized state at lambda = {lam:g}, "
              f"g = {g:g} (lambda_c = {lambda_c:g}, mu_c = {mu_c:g}, "
              f"g_c = {-2.0 * lam:g})", file=sys.stderr)
        return EXIT_NO_SOLUTION if args.strict else EXIT_OK

    summary = Section("summary", ["lambda", "g", "family", "mu", "k", "x0"])
    summary.rows.append([lam, g, state.family, state.mu, state.k,
                         math.nan if state.family == LINEAR_EXP else state.x0])
    x = np.linspace(-args.window, args.window, args.grid)
    psi = state.psi(x)
    table = Section("wavefunction", ["x", "psi"])
    for xi, pi in zip(x, psi):
        table.rows.append([float(xi), float(pi)])
    sections += [summary, table]

    if args.check:
        checks = []
        for i in _spot_indices(len(table.rows)):
            xi = float(x[i])
            center = xi if abs(xi) > 0.05 else 0.5
            checks.append((f"wavefunction row {i} (x = {xi:g})",
                           lambda c=center: _stencil_residual(
                               state.psi, c, state.mu, state.g), 1e-5))
        failures = _run_checks(checks)
        if failures:
            for msg in failures:
                print(f"check failed: {msg}", file=sys.stderr)
            return EXIT_NO_CONVERGENCE

    _emit(cfg, sections)
    return EXIT_OK


# ---------------------------------------------------------------------------
# transition


def _cmd_transition(args) -> int:
    lo, hi, n = args.lambda_min, args.lambda_max, args.grid
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError("lambda range must be finite and increasing")
    if hi >= 0.5:
        raise ValueError("the periodic continuation ends at lambda = 1/2; "
                         "choose lambda-max below it")
    if n < 2:
        raise ValueError("grid must be >= 2")
    cfg = RunConfig("transition",
                    {"lambda_min": lo, "lambda_max": hi, "grid": n},
                    args.format, args.out)

    lam_c = delta_well.LAMBDA_C_ATTRACTIVE
    table = Section("transition", ["lambda", "x0", "norm_per_period", "flag"])
    diagnostics = {}
    for lam in np.linspace(lo, hi, n):
        lam = float(lam)
        if abs(lam - lam_c) < 1e-12:
            table.rows.append([lam, None, None, "critical"])
            continue
        diag = delta_well.transition_diagnostics(lam)
        diagnostics[lam] = diag
        table.rows.append([lam, diag.x0, diag.norm_per_period, ""])

    if args.check:
        checks = []
        rows = [r for r in table.rows if r[3] != "critical"]
        for i in _spot_indices(len(rows)):
            lam = rows[i][0]
            if lam < lam_c:
                state = delta_well.bound_state(lam, -1.0)
                center = max(0.5, state.x0 if math.isfinite(state.x0) else 0.5)
                checks.append((f"transition row lambda = {lam:g}",
                               lambda s=state, c=center: _stencil_residual(
                                   s.psi, c, s.mu, s.g), 1e-5))
            else:
                wave = delta_well.bright_scattering_state(lam)
                checks.append((f"transition row lambda = {lam:g}",
                               lambda w=wave: _stencil_residual(
                                   w.psi, w.x0, w.mu, w.g), 1e-5))
        failures = _run_checks(checks)
        if failures:
            for msg in failures:
                print(f"check failed: {msg}", file=sys.stderr)
            return EXIT_NO_CONVERGENCE

    _emit(cfg, [table])
    return EXIT_OK


# ---------------------------------------------------------------------------
# shell-linear


def _cmd_shell_linear(args) -> int:
    if not (args.e_max > args.e_min > 0.0):
        raise ValueError("the energy window needs 0 < e-min < e-max")
    if args.grid < 2 or args.n_max < 0:
        raise ValueError("grid must be >= 2 and n-max >= 0")
    shell = shell_linear.ShellConfig(a=args.a, lam=args.lam)
    cfg = RunConfig("shell-linear",
                    {"a": args.a, "lambda": args.lam, "n_max": args.n_max,
                     "e_min": args.e_min, "e_max": args.e_max,
                     "grid": args.grid},
                    args.format, args.out)

    poles = shell_linear.find_poles(shell, args.n_max)
    pole_sec = Section("poles", ["n", "kind", "re_k", "im_k", "E", "Gamma"])
    for p in poles:
        pole_sec.rows.append([p.n, p.kind, p.k.real, p.k.imag, p.E, p.Gamma])

    energies = np.linspace(args.e_min, args.e_max, args.grid)
    ratios = shell_linear.amplitude_ratio_linear(shell, energies)
    ratio_sec = Section("amplitude_ratio", ["E", "ratio"])
    for e, r in zip(energies, ratios):
        ratio_sec.rows.append([float(e), float(r)])

    sections = [pole_sec, ratio_sec]
    resonances = [p for p in poles if p.kind == "resonance"]
    if resonances:
        best = min(resonances, key=lambda p: p.Gamma)
        k_res = math.sqrt(2.0 * best.E)
        x = np.linspace(0.0, 3.0 * shell.a, args.grid)
        psi = shell_linear.linear_wavefunction(shell, k_res, x)
        wf_sec = Section("resonance_wavefunction", ["x", "abs_psi2"])
        for xi, pi in zip(x, psi):
            wf_sec.rows.append([float(xi), float(pi) ** 2])
        sections.append(wf_sec)

    if args.check:
        checks = []
        for p in poles:
            checks.append((f"pole n = {p.n} residual",
                           lambda k=p.k: abs(
                               shell_linear.pole_condition(shell, k)), 1e-11))
        if shell.lam != 0.0:
            for i in _spot_indices(len(ratio_sec.rows)):
                e = float(energies[i])
                k = math.sqrt(2.0 * e)

                def row_check(k=k, e=e):
                    inner = _stencil_residual(
                        lambda xs: shell_linear.linear_wavefunction(
                            shell, k, xs), 0.5 * shell.a, e, 0.0)
                    outer = _stencil_residual(
                        lambda xs: shell_linear.linear_wavefunction(
                            shell, k, xs), 1.5 * shell.a, e, 0.0)
                    return max(inner, outer)

                checks.append((f"ratio row {i} (E = {e:g})", row_check,
                               1e-5))
        failures = _run_checks(checks)
        if failures:
            for msg in failures:
                print(f"check failed: {msg}", file=sys.stderr)
            return EXIT_NO_CONVERGENCE

    _emit(cfg, sections)
    return EXIT_OK


# ---------------------------------------------------------------------------
# shell-scan


def _scan_g(base_g: float, g_eff: float) -> float:
    """Sign of g must match the g_eff target; magnitude is immaterial
    (the amplitude ratio depends on g only through g_eff)."""
    if g_eff == 0.0:
        return base_g
    return math.copysign(abs(base_g), g_eff)


def _cmd_shell_scan(args) -> int:
    if not (args.mu_max > args.mu_min > 0.0):
        raise ValueError("the mu window needs 0 < mu-min < mu-max")
    if args.grid < 2:
        raise ValueError("grid must be >= 2")
    if args.g == 0.0:
        raise ValueError("g must be nonzero (its sign picks the wave family)")
    try:
        g_eff_list = [float(tok) for tok in args.g_eff.split(",") if tok]
    except ValueError:
        raise ValueError(f"could not parse --g-eff list {args.g_eff!r}")
    if not g_eff_list:
        raise ValueError("--g-eff needs at least one value")
    shell = shell_linear.ShellConfig(a=args.a, lam=args.lam)
    cfg = RunConfig("shell-scan",
                    {"a": args.a, "lambda": args.lam, "g": args.g,
                     "g_eff": g_eff_list, "mu_min": args.mu_min,
                     "mu_max": args.mu_max, "grid": args.grid},
                    args.format, args.out)

    scan_sec = Section("scan", ["g_eff", "mu", "ratio"])
    summary_sec = Section("resonances",
                          ["g_eff", "n", "mu_n", "mu_less", "mu_greater",
                           "width_fwhm", "width_delta", "mu_less_approx",
                           "mu_greater_approx"])
    threshold_sec = Section("threshold", ["g_eff", "mu", "threshold"])
    empty_series = []
    checks = []

    for g_eff in g_eff_list:
        g_use = _scan_g(args.g, g_eff)
        scan = shell_nonlinear.scan_resonances(
            shell, g_use, g_eff, (args.mu_min, args.mu_max),
            n_points=args.grid)
        for mu, ratio in zip(scan.mu_grid, scan.ratio):
            scan_sec.rows.append([g_eff, float(mu), float(ratio)])
        if not np.any(np.isfinite(scan.ratio)):
            empty_series.append(g_eff)
        for res in scan.resonances:
            summary_sec.rows.append([
                g_eff, res.n, res.mu_n, res.mu_less, res.mu_greater,
                res.width_fwhm, res.width_delta,
                shell_nonlinear.mu_less_approx(shell, res.n, g_eff),
                shell_nonlinear.mu_greater_approx(shell, res.n, g_eff)])
        if g_eff > 0.0:
            for mu in scan.mu_grid:
                threshold_sec.rows.append([
                    g_eff, float(mu),
                    shell_nonlinear.repulsive_existence_threshold(
                        float(mu), g_eff, shell.a)])
        if args.check:
            solved = [(float(mu), float(r))
                      for mu, r in zip(scan.mu_grid, scan.ratio)
                      if math.isfinite(r)]
            for i in _spot_indices(len(solved)):
                mu, _ = solved[i]

                def row_check(mu=mu, g_use=g_use, g_eff=g_eff):
                    sol = shell_nonlinear.matched_solution_for(
                        shell, g_use, g_eff, mu)
                    inner = _stencil_residual(sol.left.psi, 0.5 * shell.a,
                                              sol.mu, sol.g)
                    outer = _stencil_residual(
                        sol.right.psi, shell.a + 0.25 * sol.right.period,
                        sol.mu, sol.g)
                    return max(inner, outer)

                checks.append((f"scan row g_eff = {g_eff:g}, mu = {mu:g}",
                               row_check, 1e-5))

    sections = [scan_sec, summary_sec]
    if threshold_sec.rows:
        sections.append(threshold_sec)

    if checks:
        failures = _run_checks(checks)
        if failures:
            for msg in failures:
                print(f"check failed: {msg}", file=sys.stderr)
            return EXIT_NO_CONVERGENCE

    _emit(cfg, sections)
    if empty_series:
        for g_eff in empty_series:
            print(f"no solutions anywhere on the grid for g_eff = {g_eff:g}",
                  file=sys.stderr)
        if args.strict:
            return EXIT_NO_SOLUTION
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _verify_checks(grid: int) -> list[tuple[str, float, float]]:
    """Run the oracle suite; returns (name, error, threshold) triples."""
    out = []

    # Elliptic identities on a (u, p) grid.
    u = np.linspace(-8.0, 8.0, grid)
    worst = 0.0
    for p in np.linspace(0.0, 0.999, grid):
        sn, cn, dn = elliptic.jacobi(u, float(p))
        worst = max(worst,
                    float(np.max(np.abs(sn * sn + cn * cn - 1.0))),
                    float(np.max(np.abs(dn * dn + p * sn * sn - 1.0))))
    out.append(("elliptic_identities", worst, 1e-10))

    # K(p) against direct quadrature.
    worst = 0.0
    for p in np.linspace(0.0, 0.99, 23):
        p = float(p)
        quad = oracle.adaptive_simpson(
            lambda t: 1.0 / math.sqrt(1.0 - p * math.sin(t) ** 2),
            0.0, 0.5 * math.pi)
        worst = max(worst, abs(elliptic.complete_K(p) - quad) / quad)
    out.append(("complete_K_vs_quadrature", worst, 1e-12))

    # Localized states: equation residual and normalization.
    worst_res, worst_norm = 0.0, 0.0
    for lam, g in [(-1.0, -1.0), (0.1, -1.0), (-1.0, 1.0), (-0.7, 0.0),
                   (0.2, -1.0), (-2.0, 3.0)]:
        state = delta_well.bound_state(lam, g)
        worst_res = max(worst_res,
                        _stencil_residual(state.psi, 0.8, state.mu, state.g))
        span = 40.0 / max(state.k, 0.2)
        norm = 2.0 * oracle.adaptive_simpson(
            lambda t: state.psi(t) ** 2, 0.0, span, tol=1e-12)
        worst_norm = max(worst_norm, abs(norm - 1.0))
    out.append(("bound_state_residual", worst_res, 1e-5))
    out.append(("bound_state_normalization", worst_norm, 1e-8))

    # Periodic continuation beyond the critical point.
    wave = delta_well.bright_scattering_state(0.3)
    out.append(("scattering_wave_residual",
                _stencil_residual(wave.psi, wave.x0, wave.mu, wave.g), 1e-5))

    # Linear shell: pole residuals and winding count.
    shell = shell_linear.ShellConfig(a=1.0, lam=10.0)
    poles = shell_linear.find_poles(shell, 3)
    worst = max(abs(shell_linear.pole_condition(shell, p.k)) for p in poles)
    out.append(("shell_pole_residual", worst, 1e-11))
    count = oracle.argument_principle_count(
        lambda k: shell_linear.pole_condition(shell, k),
        0.05, 12.0, -3.0, -1e-4, n_samples=4000)
    res_count = sum(1 for p in poles if p.kind == "resonance")
    out.append(("shell_pole_count", float(abs(count - res_count)), 0.5))

    # Closed-form shell wave against direct integration.
    k = 2.0
    shot = oracle.shoot(0.5 * k * k, 0.0, [(1.0, 10.0)], 3.0,
                        0.0, k, h=1e-3)
    exact = shell_linear.linear_wavefunction(shell, k, shot.x)
    out.append(("shell_wave_vs_integration",
                float(np.max(np.abs(shot.psi - exact))), 1e-8))

    # Nonlinear shell: matched solution continued from the wall through
    # the delta by direct integration, landed on the outer wave.
    worst = 0.0
    for g, g_eff, mu in [(-1.0, -5.0, 30.0), (1.0, 2.0, 20.0)]:
        sol = shell_nonlinear.matched_solution_for(shell, g, g_eff, mu)
        shot = oracle.shoot(sol.mu, sol.g, [(shell.a, shell.lam)],
                            shell.a + 0.4, 0.0, sol.left.dpsi(0.0), h=1e-4)
        exact = sol.right.psi(float(shot.x[-1]))
        worst = max(worst, abs(float(shot.psi[-1]) - exact))
    out.append(("shell_match_vs_integration", worst, 1e-7))

    # Linear limit of the nonlinear machinery.
    worst = 0.0
    for mu in (4.0, 9.0, 25.0):
        sol = shell_nonlinear.matched_solution_for(shell, -1.0, 0.0, mu)
        lin = float(shell_linear.amplitude_ratio_linear(shell, mu))
        worst = max(worst, abs(sol.amplitude_ratio - lin))
    out.append(("shell_linear_limit", worst, 1e-6))

    return out


def _cmd_verify(args) -> int:
    cfg = RunConfig("verify", {"grid": args.grid}, args.format, args.out)
    results = _verify_checks(args.grid)
    table = Section("checks", ["check", "status", "error", "threshold"])
    n_failed = 0
    for name, err, threshold in results:
        ok = err < threshold
        n_failed += 0 if ok else 1
        table.rows.append([name, "ok" if ok else "FAIL", err, threshold])
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {err:.3e} "
              f"(threshold {threshold:g})", file=sys.stderr)
    _emit(cfg, [table])
    return EXIT_OK if n_failed == 0 else EXIT_NO_CONVERGENCE


# ---------------------------------------------------------------------------
# Parser and entry point


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="output format (default csv)")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="output file (default stdout)")
    p.add_argument("--strict", action="store_true",
                   help="exit 4 when the requested domain has no solution")
    p.add_argument("--check", action="store_true",
                   help="spot-check ~1%% of emitted rows against the oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nlse-delta",
        description="Stationary states of the 1D NLSE with delta potentials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound-state",
                       help="localized state of a single delta well")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="delta strength")
    p.add_argument("--g", type=float, required=True, help="nonlinearity")
    p.add_argument("--window", type=float, default=10.0,
                   help="half-width of the x table (default 10)")
    p.add_argument("--grid", type=int, default=401,
                   help="number of x samples (default 401)")
    _add_common(p)
    p.set_defaults(func=_cmd_bound_state)

    p = sub.add_parser("transition",
                       help="x0 and norm per period across lambda_c = 1/4 "
                            "(g = -1)")
    p.add_argument("--lambda-min", type=float, default=0.2)
    p.add_argument("--lambda-max", type=float, default=0.3)
    p.add_argument("--grid", type=int, default=21,
                   help="number of lambda samples (default 21)")
    _add_common(p)
    p.set_defaults(func=_cmd_transition)

    p = sub.add_parser("shell-linear",
                       help="linear scattering off a shell in a hard wall")
    p.add_argument("--a", type=float, default=1.0, help="shell radius")
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="shell strength (0 gives a transparent shell)")
    p.add_argument("--n-max", type=int, default=3,
                   help="resonance bands to search (default 3)")
    p.add_argument("--e-min", type=float, default=0.05)
    p.add_argument("--e-max", type=float, default=30.0)
    p.add_argument("--grid", type=int, default=600,
                   help="number of energy samples (default 600)")
    _add_common(p)
    p.set_defaults(func=_cmd_shell_linear)

    p = sub.add_parser("shell-scan",
                       help="nonlinear shell resonances at fixed g_eff")
    p.add_argument("--a", type=float, default=1.0, help="shell radius")
    p.add_argument("--lambda", dest="lam", type=float, default=10.0,
                   help="shell strength (default 10)")
    p.add_argument("--g", type=float, default=-1.0,
                   help="nonlinearity magnitude; its sign is overridden by "
                        "the sign of each g_eff target (default -1)")
    p.add_argument("--g-eff", default="0",
                   help="comma-separated effective nonlinearity targets; "
                        "write --g-eff=-5,0,5 for negative values "
                        "(default '0')")
    p.add_argument("--mu-min", type=float, default=1.0)
    p.add_argument("--mu-max", type=float, default=80.0)
    p.add_argument("--grid", type=int, default=400,
                   help="mu samples per series (default 400)")
    _add_common(p)
    p.set_defaults(func=_cmd_shell_scan)

    p = sub.add_parser("verify", help="run the oracle suite")
    p.add_argument("--grid", type=int, default=100,
                   help="identity-grid resolution (default 100)")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS
    except NonConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except NoSolutionError as exc:
        print(f"no solution: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION


if __name__ == "__main__":
    sys.exit(main())
