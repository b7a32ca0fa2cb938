"""Command-line interface.

Subcommands sweep a temperature grid for one of the model systems and emit
a small CSV dialect:

    # thermwit-csv v1          <- format tag
    # key = value              <- config echo, one line per setting
    T,Z,p,threshold,...        <- column header, then data rows
    ## key = value             <- scalar results (transitions, bounds)

Floats are written with repr() so equal configs give byte-identical output.
`thermwit verify` runs the built-in cross-check suite instead of a sweep.

Exit codes: 0 success, 1 verification failure, 2 bad configuration,
3 numerical failure, 4 cross-check mismatch.
"""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .checks import run_all
from .config import GridSpec, RunConfig, apply_overrides, load_config
from .entanglement import (
    Partition,
    RobustnessBound,
    bipartite_pure_robustness,
    bound_from_relative_entropy,
    concurrence_two_qubit,
    dicke_half_asymptotic,
    dicke_overlap_closed,
    dicke_robustness,
    geometric_measure_als,
    ppt_min_eigenvalue,
    singlet_robustness,
)
from .errors import (
    DomainError,
    NoSignChange,
    ThermwitError,
    ThresholdUnreachable,
)
from .numerics import bisect, hermitian_eigendecompose
from .systems import (
    DimerParams,
    PureState,
    Spectrum,
    ToySpectrumParams,
    build_dimer_hamiltonian,
    build_stabilizer_hamiltonian,
    dicke_state,
    dimer_spectrum,
    graph_state,
    read_edge_list,
    stabilizer_spectrum,
    toy_spectrum,
)
from .thermal import (
    ThermalPoint,
    log_partition_function,
    log_partition_function_alpha_closed,
    log_stabilizer_partition_function,
    partition_function,
    partition_function_alpha_closed,
    partition_function_alpha_gamma,
    thermal_density_matrix,
)
from .witness import (
    concurrence_vanishing_temperature,
    evaluate_condition,
    flip_probability_from_temperature,
    gapping_rule_min_gap,
    noise_threshold,
    satisfying_intervals,
    stabilizer_t_trans,
    toy_t0,
    toy_t1,
    toy_t_alpha,
    transition_temperature,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_MISMATCH = 4

LN2 = math.log(2.0)
ORACLE_LEVEL_CAP = 10**5


class MismatchError(ThermwitError):
    """An oracle cross-check disagreed beyond tolerance."""


def _fmt(x: float) -> str:
    return repr(float(x))


def _fb(b: bool) -> str:
    return "true" if b else "false"


def _emit(
    config_pairs: Sequence[tuple[str, str]],
    columns: Sequence[str],
    rows: Sequence[Sequence[str]],
    summaries: Sequence[tuple[str, str]],
) -> str:
    lines = ["# thermwit-csv v1"]
    lines.extend(f"# {k} = {v}" for k, v in config_pairs)
    if columns:
        lines.append(",".join(columns))
        lines.extend(",".join(row) for row in rows)
    lines.extend(f"## {k} = {v}" for k, v in summaries)
    return "\n".join(lines) + "\n"


def _deliver(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")
    for line in text.splitlines():
        if line.startswith("## "):
            sys.stdout.write(line[3:] + "\n")


# --- spin dimer ---------------------------------------------------------------


def _dimer_bound(p: DimerParams) -> RobustnessBound:
    if p.B < 4.0 * p.J:
        return singlet_robustness()
    product_ground = PureState(2, np.array([1.0, 0.0, 0.0, 0.0]))
    return bipartite_pure_robustness(product_ground, Partition.bipartition([0], 2))


def cmd_dimer(cfg: RunConfig) -> int:
    p = DimerParams(B=cfg.dimer_b, J=cfg.dimer_j)
    sp = dimer_spectrum(p)
    bound = _dimer_bound(p)
    singlet_phase = p.B < 4.0 * p.J
    temps = cfg.grid.values()

    config_pairs = [
        ("system", "dimer"),
        ("B", _fmt(p.B)),
        ("J", _fmt(p.J)),
        ("kB", _fmt(cfg.k_b)),
        ("grid", cfg.grid.spec_string()),
        ("seed", str(cfg.seed)),
        ("oracles", _fb(cfg.oracles)),
    ]
    columns = ["T", "Z", "p", "threshold", "satisfied", "bound_kind"]
    if cfg.oracles:
        columns += ["concurrence", "min_pt_eig"]
        h = build_dimer_hamiltonian(p)

    rows = []
    for temp in temps:
        point = ThermalPoint(float(temp), cfg.k_b)
        z = partition_function(sp, point)
        verdict = evaluate_condition(sp, point, bound)
        row = [
            _fmt(temp),
            _fmt(z),
            _fmt(verdict.population),
            _fmt(verdict.threshold),
            _fb(verdict.satisfied),
            bound.kind.value,
        ]
        if cfg.oracles:
            rho = thermal_density_matrix(h, point)
            row += [
                _fmt(concurrence_two_qubit(rho)),
                _fmt(ppt_min_eigenvalue(rho, (2, 2), (0,))),
            ]
        rows.append(row)

    summaries = [
        ("one_plus_r", _fmt(bound.one_plus_r)),
        ("threshold", _fmt(bound.threshold)),
        ("bound_kind", bound.kind.value),
        ("phase", "singlet-ground" if singlet_phase else "product-ground"),
    ]
    tr = transition_temperature(sp, bound, cfg.k_b)
    summaries.append(("t_trans", _fmt(tr.t_trans) if tr.detected else "none"))
    if not singlet_phase:
        singlet_energy = -3.0 * p.J
        level = int(np.argmin(np.abs(np.array(sp.energies) - singlet_energy)))
        intervals = satisfying_intervals(sp, singlet_robustness(), temps, level, cfg.k_b)
        summaries.append(("singlet_level_intervals", repr(intervals)))
    if cfg.oracles and singlet_phase:
        t_conc = concurrence_vanishing_temperature(p, k_b=cfg.k_b)
        summaries.append(("t_concurrence_zero", _fmt(t_conc)))
        if tr.detected:
            summaries.append(("t_margin", _fmt(t_conc - tr.t_trans)))
            if tr.t_trans > t_conc * (1.0 + 1e-9):
                raise MismatchError(
                    f"witness crossing {tr.t_trans!r} above concurrence zero {t_conc!r}"
                )

    _deliver(_emit(config_pairs, columns, rows, summaries), cfg.out)
    return EXIT_OK


# --- power-law ladder ---------------------------------------------------------


def _toy_log_p0(p: ToySpectrumParams, kt: float) -> float:
    return -p.e0 / kt - log_partition_function_alpha_closed(p, ThermalPoint(kt))


def _toy_transition(
    p: ToySpectrumParams, bound: RobustnessBound, k_b: float
) -> float | None:
    """Crossing of the ground condition from the closed-form tail.

    Returns the temperature, None when never satisfied, and +inf when the
    threshold lies below the infinite-temperature population 1/D.
    """
    log_threshold = math.log(bound.threshold)

    def f(kt: float) -> float:
        return _toy_log_p0(p, kt) - log_threshold

    spread = p.delta * max(1.0, float(p.n_levels - 1) ** p.alpha)
    lo, hi = 1e-6 * p.delta, 1e4 * spread
    if f(lo) <= 0.0:
        return None
    if f(hi) >= 0.0:
        return math.inf
    return bisect(f, lo, hi, tol=1e-10) / k_b


def cmd_toy(cfg: RunConfig) -> int:
    p = ToySpectrumParams(
        e0=cfg.toy_e0, delta=cfg.toy_delta, alpha=cfg.toy_alpha, n_levels=cfg.toy_d
    )
    if cfg.toy_n is not None:
        if cfg.toy_n < 2 or cfg.toy_n % 2:
            raise ThermwitError(f"--n must be even and >= 2, got {cfg.toy_n}")
        e_r = math.log2(dicke_robustness(cfg.toy_n, cfg.toy_n // 2).one_plus_r)
    elif cfg.toy_e_r is not None:
        e_r = cfg.toy_e_r
    else:
        raise ThermwitError("toy needs --eR or --n")
    if not e_r > 0.0:
        raise ThermwitError(f"entanglement input must be positive, got {e_r}")
    bound = bound_from_relative_entropy(e_r)
    if cfg.oracles and p.n_levels > ORACLE_LEVEL_CAP:
        raise ThermwitError(
            f"--oracles re-sums the spectrum and needs D <= {ORACLE_LEVEL_CAP}"
        )

    temps = cfg.grid.values()
    config_pairs = [
        ("system", "toy"),
        ("E0", _fmt(p.e0)),
        ("delta", _fmt(p.delta)),
        ("alpha", _fmt(p.alpha)),
        ("D", str(p.n_levels)),
        ("eR", _fmt(e_r)),
    ]
    if cfg.toy_n is not None:
        config_pairs.append(("n", str(cfg.toy_n)))
    config_pairs += [
        ("kB", _fmt(cfg.k_b)),
        ("grid", cfg.grid.spec_string()),
        ("seed", str(cfg.seed)),
        ("oracles", _fb(cfg.oracles)),
    ]

    columns = ["T", "Z", "p", "threshold", "satisfied", "bound_kind"]
    if p.alpha > 0.0:
        columns += ["z_gamma", "gamma_rel_err"]
    if cfg.oracles:
        columns.append("z_spectrum")
        sp_oracle = toy_spectrum(p)

    log_threshold = math.log(bound.threshold)
    rows = []
    worst_oracle = 0.0
    for temp in temps:
        kt = float(temp) * cfg.k_b
        point = ThermalPoint(float(temp), cfg.k_b)
        z = partition_function_alpha_closed(p, ThermalPoint(kt))
        log_p0 = _toy_log_p0(p, kt)
        row = [
            _fmt(temp),
            _fmt(z),
            _fmt(math.exp(log_p0)),
            _fmt(bound.threshold),
            _fb(log_p0 > log_threshold),
            bound.kind.value,
        ]
        if p.alpha > 0.0:
            zg = partition_function_alpha_gamma(p, ThermalPoint(kt))
            row += [_fmt(zg), _fmt(abs(zg - z) / z)]
        if cfg.oracles:
            z_sp = partition_function(sp_oracle, point)
            row.append(_fmt(z_sp))
            worst_oracle = max(worst_oracle, abs(z_sp - z) / z)
        rows.append(row)

    summaries = [
        ("one_plus_r", _fmt(bound.one_plus_r)),
        ("threshold", _fmt(bound.threshold)),
        ("bound_kind", bound.kind.value),
        ("min_gap_rule", _fmt(gapping_rule_min_gap(e_r))),
    ]
    t_star = _toy_transition(p, bound, cfg.k_b)
    if t_star is None:
        summaries.append(("t_trans", "none"))
    elif math.isinf(t_star):
        summaries.append(("t_trans", "inf"))
        summaries.append(("t_trans_note", "condition holds at every temperature"))
    else:
        summaries.append(("t_trans", _fmt(t_star)))
    if p.alpha == 0.0:
        try:
            summaries.append(
                ("t0_closed_form", _fmt(toy_t0(p.n_levels, e_r, p.delta) / cfg.k_b))
            )
        except ThresholdUnreachable:
            summaries.append(("t0_closed_form", "unreachable"))
        t1 = toy_t1(e_r, p.delta)
        summaries.append(("t1_exact", _fmt(t1.exact / cfg.k_b)))
        summaries.append(("t1_low_t", _fmt(t1.low_t / cfg.k_b)))
    if p.alpha > 0.0 and cfg.toy_n is not None:
        summaries.append(
            ("t_alpha_formula", _fmt(toy_t_alpha(p.alpha, cfg.toy_n, p.delta) / cfg.k_b))
        )
    if cfg.oracles:
        summaries.append(("z_spectrum_max_rel_err", _fmt(worst_oracle)))
        if worst_oracle > 1e-9:
            raise MismatchError(
                f"spectrum re-sum disagrees with closed form by {worst_oracle:.3e}"
            )

    _deliver(_emit(config_pairs, columns, rows, summaries), cfg.out)
    return EXIT_OK


# --- symmetric (Dicke) bound report -------------------------------------------


def cmd_dicke(cfg: RunConfig) -> int:
    n = cfg.dicke_n
    k = cfg.dicke_k if cfg.dicke_k is not None else n // 2
    bound = dicke_robustness(n, k)
    overlap = dicke_overlap_closed(n, k)

    config_pairs = [
        ("system", "dicke"),
        ("n", str(n)),
        ("k", str(k)),
        ("seed", str(cfg.seed)),
        ("oracles", _fb(cfg.oracles)),
    ]
    summaries = [
        ("one_plus_r", _fmt(bound.one_plus_r)),
        ("threshold", _fmt(bound.threshold)),
        ("bound_kind", bound.kind.value),
        ("e_r_bits", _fmt(bound.relative_entropy_bits)),
        ("max_product_overlap", _fmt(overlap)),
        ("max_product_overlap_sq", _fmt(overlap**2)),
    ]
    if n % 2 == 0 and k == n // 2:
        summaries.append(("sqrt_n", _fmt(dicke_half_asymptotic(n))))
        summaries.append(
            ("log_ratio_to_sqrt_n", _fmt(math.log2(bound.one_plus_r) / math.log2(math.sqrt(n))))
        )
    if cfg.oracles:
        if n > 12:
            raise ThermwitError("--oracles runs a dense search and needs n <= 12")
        als_overlap, eg_upper = geometric_measure_als(dicke_state(n, k), seed=cfg.seed)
        summaries += [
            ("als_overlap", _fmt(als_overlap)),
            ("als_eg_upper_bits", _fmt(eg_upper)),
            ("als_vs_closed", _fmt(abs(als_overlap - overlap))),
        ]
        if abs(als_overlap - overlap) > 1e-6:
            raise MismatchError(
                f"search overlap {als_overlap!r} vs closed form {overlap!r}"
            )
        if n % 2 == 0 and k == n // 2:
            half = bipartite_pure_robustness(
                dicke_state(n, k), Partition.bipartition(range(n // 2), n)
            )
            summaries.append(("half_cut_one_plus_r", _fmt(half.one_plus_r)))
            if abs(half.one_plus_r - bound.one_plus_r) > 1e-8 * bound.one_plus_r:
                raise MismatchError(
                    f"half-cut bound {half.one_plus_r!r} vs closed {bound.one_plus_r!r}"
                )

    _deliver(_emit(config_pairs, [], [], summaries), cfg.out)
    return EXIT_OK


# --- stabilizer graph ----------------------------------------------------------


def _graph_log_p0(n: int, b: float, kt: float) -> float:
    return -n * float(np.logaddexp(0.0, -2.0 * b / kt))


def cmd_graph(cfg: RunConfig) -> int:
    if cfg.graph_edges is None:
        raise ThermwitError("graph needs --edges FILE (first line n, then 'u v' rows)")
    g = read_edge_list(cfg.graph_edges)
    b = cfg.graph_b
    if not b > 0.0:
        raise ThermwitError(f"coupling B must be positive, got {b}")
    ratio = cfg.graph_e_r_per_site
    if not 0.0 < ratio < 1.0:
        raise ThermwitError(f"per-site eR must lie in (0, 1), got {ratio}")
    e_r = ratio * g.n
    if e_r > 1000.0:
        raise ThermwitError(
            f"total eR = {e_r:g} bits makes the population threshold underflow; "
            "for very large graphs call stabilizer_t_trans / noise_threshold directly"
        )
    bound = bound_from_relative_entropy(e_r)
    log_threshold = -e_r * LN2

    temps = cfg.grid.values()
    config_pairs = [
        ("system", "graph"),
        ("edges", str(cfg.graph_edges)),
        ("n", str(g.n)),
        ("n_edges", str(len(g.edges))),
        ("B", _fmt(b)),
        ("eR_per_site", _fmt(ratio)),
        ("kB", _fmt(cfg.k_b)),
        ("grid", cfg.grid.spec_string()),
        ("seed", str(cfg.seed)),
        ("oracles", _fb(cfg.oracles)),
        ("matrix_check", _fb(cfg.matrix_check)),
    ]
    columns = ["T", "Z", "p", "threshold", "satisfied", "bound_kind"]
    if cfg.oracles:
        columns += ["p_flip", "p_from_flip"]

    rows = []
    worst_flip = 0.0
    for temp in temps:
        kt = float(temp) * cfg.k_b
        point = ThermalPoint(float(temp), cfg.k_b)
        z = math.exp(log_stabilizer_partition_function(g.n, b, point))
        log_p0 = _graph_log_p0(g.n, b, kt)
        row = [
            _fmt(temp),
            _fmt(z),
            _fmt(math.exp(log_p0)),
            _fmt(bound.threshold),
            _fb(log_p0 > log_threshold),
            bound.kind.value,
        ]
        if cfg.oracles:
            p_flip = flip_probability_from_temperature(b, point)
            p_from_flip = (1.0 - p_flip) ** g.n
            row += [_fmt(p_flip), _fmt(p_from_flip)]
            worst_flip = max(worst_flip, abs(p_from_flip - math.exp(log_p0)))
        rows.append(row)

    t_trans = stabilizer_t_trans(g.n, b, e_r) / cfg.k_b
    summaries = [
        ("one_plus_r", _fmt(bound.one_plus_r)),
        ("threshold", _fmt(bound.threshold)),
        ("bound_kind", bound.kind.value),
        ("t_trans", _fmt(t_trans)),
        ("p_flip_threshold", _fmt(noise_threshold(e_r, g.n))),
        (
            "p_flip_at_t_trans",
            _fmt(flip_probability_from_temperature(b, ThermalPoint(t_trans, cfg.k_b))),
        ),
    ]
    if cfg.oracles:
        summaries.append(("flip_identity_max_err", _fmt(worst_flip)))
        if worst_flip > 1e-12:
            raise MismatchError(
                f"(1 - p_flip)^n disagrees with ground population by {worst_flip:.3e}"
            )
        sp = stabilizer_spectrum(g.n, b)
        tr = transition_temperature(sp, bound, cfg.k_b)
        summaries.append(
            ("t_trans_bisect", _fmt(tr.t_trans) if tr.detected else "none")
        )
        if not tr.detected or abs(tr.t_trans - t_trans) > 1e-8 * t_trans:
            raise MismatchError(
                f"bisected crossing {tr.t_trans!r} vs closed form {t_trans!r}"
            )
    if cfg.matrix_check:
        if g.n > 12:
            raise ThermwitError("--matrix-check builds 2^n matrices and needs n <= 12")
        h = build_stabilizer_hamiltonian(g, b)
        eig = hermitian_eigendecompose(h)
        dense = Spectrum.from_values(eig.eigenvalues)
        analytic = stabilizer_spectrum(g.n, b)
        levels_ok = dense.degeneracies == analytic.degeneracies and bool(
            np.max(np.abs(np.array(dense.energies) - np.array(analytic.energies)))
            <= 1e-9 * max(1.0, abs(b) * g.n)
        )
        psi = graph_state(g)
        residual = float(
            np.linalg.norm(h @ psi.amplitudes - analytic.ground_energy * psi.amplitudes)
        )
        z_err = 0.0
        for temp in temps[:: max(1, len(temps) // 8)]:
            point = ThermalPoint(float(temp), cfg.k_b)
            z_closed = math.exp(log_stabilizer_partition_function(g.n, b, point))
            z_dense = partition_function(dense, point)
            z_err = max(z_err, abs(z_dense - z_closed) / z_closed)
        summaries += [
            ("matrix_levels_match", _fb(levels_ok)),
            ("ground_state_residual", _fmt(residual)),
            ("z_trace_max_rel_err", _fmt(z_err)),
        ]
        if not levels_ok or residual > 1e-9 or z_err > 1e-9:
            raise MismatchError(
                f"dense matrix check failed: levels_ok={levels_ok} "
                f"residual={residual:.3e} z_err={z_err:.3e}"
            )

    _deliver(_emit(config_pairs, columns, rows, summaries), cfg.out)
    return EXIT_OK


# --- verification --------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> int:
    results = run_all(cfg.seed)
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        lines.append(f"[{tag}] {r.name:<{width}}  {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"passed {passed}/{len(results)}")
    text = "\n".join(lines) + "\n"
    if cfg.out is not None:
        Path(cfg.out).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return EXIT_OK if passed == len(results) else EXIT_VERIFY_FAILED


# --- argument plumbing ----------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser, grid: bool = True) -> None:
    sub.add_argument("--config", metavar="FILE", help="load settings from a config file")
    sub.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    sub.add_argument("--out", metavar="FILE", default=None, help="write output here")
    if grid:
        sub.add_argument("--kB", type=float, default=None, dest="k_b",
                         help="Boltzmann constant (sets temperature units)")
        sub.add_argument("--grid", type=GridSpec.parse, default=None, metavar="LO:HI:N:lin|log",
                         help="temperature grid")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermwit",
        description="Certify thermal-state entanglement from ground-state weight.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    d = subs.add_parser("dimer", help="two-qubit exchange dimer in a field")
    _add_common(d)
    d.add_argument("--B", type=float, default=None, dest="dimer_b", help="field strength")
    d.add_argument("--J", type=float, default=None, dest="dimer_j", help="exchange coupling")
    d.add_argument("--oracles", action="store_const", const=True, default=None,
                   help="add concurrence and partial-transpose columns")

    t = subs.add_parser("toy", help="power-law ladder above an entangled ground state")
    _add_common(t)
    t.add_argument("--E0", type=float, default=None, dest="toy_e0", help="ground energy")
    t.add_argument("--delta", type=float, default=None, dest="toy_delta", help="gap scale")
    t.add_argument("--alpha", type=float, default=None, dest="toy_alpha",
                   help="spacing exponent in [0, 1]")
    t.add_argument("--D", type=int, default=None, dest="toy_d", help="number of levels")
    t.add_argument("--eR", type=float, default=None, dest="toy_e_r",
                   help="relative entropy of entanglement of the ground state (bits)")
    t.add_argument("--n", type=int, default=None, dest="toy_n",
                   help="derive eR from the half-filled symmetric state on n sites")
    t.add_argument("--oracles", action="store_const", const=True, default=None,
                   help="re-sum the spectrum as a partition-function cross-check")

    k = subs.add_parser("dicke", help="closed-form bound for symmetric states")
    _add_common(k, grid=False)
    k.add_argument("--n", type=int, default=None, dest="dicke_n", help="number of sites")
    k.add_argument("--k", type=int, default=None, dest="dicke_k",
                   help="excitation number (default n // 2)")
    k.add_argument("--oracles", action="store_const", const=True, default=None,
                   help="cross-check the bound with an alternating product search")

    g = subs.add_parser("graph", help="stabilizer Hamiltonian of a graph state")
    _add_common(g)
    g.add_argument("--edges", metavar="FILE", default=None, dest="graph_edges",
                   help="edge list: first line n, then one 'u v' pair per line")
    g.add_argument("--B", type=float, default=None, dest="graph_b", help="stabilizer coupling")
    g.add_argument("--eR", type=float, default=None, dest="graph_e_r_per_site",
                   help="per-site entanglement input, in (0, 1) bits")
    g.add_argument("--oracles", action="store_const", const=True, default=None,
                   help="add flip-probability identity columns and a bisection cross-check")
    g.add_argument("--matrix-check", action="store_const", const=True, default=None,
                   dest="matrix_check", help="diagonalize the dense Hamiltonian (n <= 12)")

    v = subs.add_parser("verify", help="run the built-in cross-check suite")
    v.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    v.add_argument("--out", metavar="FILE", default=None, help="also write the report here")

    return parser


_COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "dimer": cmd_dimer,
    "toy": cmd_toy,
    "dicke": cmd_dicke,
    "graph": cmd_graph,
    "verify": cmd_verify,
}


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    base = (
        load_config(args.config)
        if getattr(args, "config", None) is not None
        else RunConfig()
    )
    overrides = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "config") and value is not None
    }
    if args.command in _COMMANDS and args.command != "verify":
        overrides["system"] = args.command
    return apply_overrides(base, **overrides)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; keep main() returning an int
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG
    try:
        cfg = _config_from_args(args)
    except (ThermwitError, OSError) as exc:
        print(f"thermwit: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return _COMMANDS[args.command](cfg)
    except MismatchError as exc:
        print(f"thermwit: cross-check mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (NoSignChange, DomainError, OverflowError, np.linalg.LinAlgError) as exc:
        print(f"thermwit: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ThermwitError, OSError) as exc:
        print(f"thermwit: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
