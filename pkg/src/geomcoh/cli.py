"""Command-line front end.

Four subcommands:

    analyze     one state file -> full coherence/bounds/trade-off report
    mcms-sweep  bounds vs mixing parameter for the maximally coherent
                mixed family, as CSV (optionally with a rendered figure)
    ensemble    seeded random-state benchmark of bound tightness, as CSV
                (optionally with a rendered figure)
    gen         write a state file for one of the named families

Exit codes: 0 success, 2 state validation failure, 3 missing file, 4 state
file parse error, 5 bad parameter.
"""

import argparse
import json
import sys
import time
from contextlib import nullcontext
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import coherence, states, tradeoff
from .errors import BadParameterError, StateFileParseError, StateValidationError
from .linalg import ValidationConfig, purity, validate_density
from .oracle import Objective, OracleConfig, maximize_over_simplex
from .statefile import read_state, write_state

SWEEP_HEADER = "d,p,lower,upper_diag,upper_sqrt,exact_cg,oracle_cg"
ENSEMBLE_HEADER = (
    "index,lower,upper,oracle_cg,gap_lower,gap_upper,l1_budget,g_budget,"
    "mean_gap_lower,max_gap_lower,mean_gap_upper,max_gap_upper,violation_count"
)

ANALYZE_FIELDS = [
    "label",
    "dim",
    "purity",
    "c_l1",
    "c_rel",
    "lower",
    "upper_diag",
    "upper_sqrt",
    "upper",
    "exact",
    "exact_provenance",
    "oracle_cg",
    "oracle_converged",
    "m_linear",
    "m_geometric",
    "tradeoff_l1_budget",
    "tradeoff_g_budget",
    "elapsed_ms",
]


@dataclass(frozen=True)
class SweepRecord:
    """One row of a mixing-parameter sweep."""

    d: int
    p: float
    lower: float
    upper_diag: float
    upper_sqrt: float
    exact_cg: float
    oracle_cg: float | None


@dataclass(frozen=True)
class EnsembleRow:
    """Bounds, reference value, and budgets for one sampled state."""

    index: int
    lower: float
    upper: float
    oracle_cg: float
    gap_lower: float
    gap_upper: float
    l1_budget: float
    g_budget: float


@dataclass(frozen=True)
class EnsembleSummary:
    mean_gap_lower: float
    max_gap_lower: float
    mean_gap_upper: float
    max_gap_upper: float
    violation_count: int


def _fmt(value) -> str:
    """Shortest round-trip decimal for floats; empty for missing values."""
    if value is None:
        return ""
    return repr(float(value))


class _Parser(argparse.ArgumentParser):
    # Flag/usage mistakes are bad parameters, exit code 5.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(5)


def _open_out(path: str | None):
    return open(path, "w") if path else nullcontext(sys.stdout)


def _resolve_plot_path(plot_arg: str | None, out_path: str | None, fallback: str):
    """Figure destination: explicit path, or next to the CSV for a bare --plot."""
    if plot_arg is None:
        return None
    if plot_arg:
        return plot_arg
    if out_path:
        return str(Path(out_path).with_suffix(".png"))
    return fallback


# ---------------------------------------------------------------------------
# analyze


def analyze_state(
    rho: np.ndarray,
    label: str | None,
    run_oracle: bool,
    oracle_config: OracleConfig,
) -> dict:
    """Full measurement report for one validated state, as an ordered dict."""
    t0 = time.perf_counter()
    d = rho.shape[0]
    bounds = coherence.cg_bounds(rho)
    oracle_cg = None
    oracle_converged = None
    if run_oracle:
        result = maximize_over_simplex(rho, Objective.FIDELITY, oracle_config)
        oracle_cg = max(0.0, 1.0 - result.value)
        oracle_converged = result.converged
    cg_value = bounds.exact if bounds.exact is not None else oracle_cg
    l1_budget, _ = tradeoff.check_l1_tradeoff(rho)
    g_budget = None
    if cg_value is not None:
        g_budget, _ = tradeoff.check_geometric_tradeoff(rho, cg_value)
    elapsed_ms = (time.perf_counter() - t0) * 1e3
    return {
        "label": label,
        "dim": d,
        "purity": purity(rho),
        "c_l1": coherence.c_l1(rho),
        "c_rel": coherence.c_rel(rho),
        "lower": bounds.lower,
        "upper_diag": bounds.upper_diag,
        "upper_sqrt": bounds.upper_sqrt,
        "upper": bounds.upper,
        "exact": bounds.exact,
        "exact_provenance": bounds.exact_provenance.value,
        "oracle_cg": oracle_cg,
        "oracle_converged": oracle_converged,
        "m_linear": tradeoff.m_linear(rho),
        "m_geometric": tradeoff.m_geometric(rho),
        "tradeoff_l1_budget": l1_budget,
        "tradeoff_g_budget": g_budget,
        "elapsed_ms": elapsed_ms,
    }


def _cmd_analyze(args) -> int:
    with open(args.state) as fp:
        raw, label = read_state(fp)
    validation = ValidationConfig(
        hermitian_tol=args.herm_tol,
        eigenvalue_clamp=args.eig_clamp,
        trace_tol=args.trace_tol,
    )
    rho = validate_density(raw, validation)
    d = rho.shape[0]
    run_oracle = args.oracle == "on" or (args.oracle == "auto" and d <= 8)
    report = analyze_state(
        rho, label, run_oracle, OracleConfig(n_starts=args.oracle_starts)
    )
    if args.csv:
        print(",".join(ANALYZE_FIELDS))
        cells = []
        for key in ANALYZE_FIELDS:
            value = report[key]
            if isinstance(value, bool):
                cells.append(str(value).lower())
            elif isinstance(value, float):
                cells.append(_fmt(value))
            elif value is None:
                cells.append("")
            else:
                cells.append(str(value))
        print(",".join(cells))
    else:
        print(json.dumps(report, indent=1))
    return 0


# ---------------------------------------------------------------------------
# mcms-sweep


def sweep_records(
    d: int, ps, run_oracle: bool, oracle_config: OracleConfig | None = None
) -> list[SweepRecord]:
    """Bounds, exact value, and optional oracle value across mixing parameters."""
    records = []
    for p in ps:
        rho = states.mcms(d, p)
        oracle_cg = None
        if run_oracle:
            result = maximize_over_simplex(rho, Objective.FIDELITY, oracle_config)
            oracle_cg = max(0.0, 1.0 - result.value)
        records.append(
            SweepRecord(
                d=d,
                p=float(p),
                lower=coherence.cg_lower(rho),
                upper_diag=coherence.cg_upper_diag(rho),
                upper_sqrt=coherence.cg_upper_sqrt(rho),
                exact_cg=coherence.cg_exact_mcms(d, p),
                oracle_cg=oracle_cg,
            )
        )
    return records


def _cmd_mcms_sweep(args) -> int:
    if args.d < 2:
        raise BadParameterError(f"BadParameter: --d must be >= 2, got {args.d}")
    if not 0.0 < args.p_min <= args.p_max <= 1.0:
        raise BadParameterError(
            f"BadParameter: need 0 < p-min <= p-max <= 1, got {args.p_min}..{args.p_max}"
        )
    if args.p_steps < 1:
        raise BadParameterError(f"BadParameter: --p-steps must be >= 1, got {args.p_steps}")
    ps = np.linspace(args.p_min, args.p_max, args.p_steps)
    records = sweep_records(
        args.d, ps, args.oracle == "on", OracleConfig(n_starts=args.oracle_starts)
    )
    with _open_out(args.out) as out:
        print(SWEEP_HEADER, file=out)
        for r in records:
            print(
                f"{r.d},{_fmt(r.p)},{_fmt(r.lower)},{_fmt(r.upper_diag)},"
                f"{_fmt(r.upper_sqrt)},{_fmt(r.exact_cg)},{_fmt(r.oracle_cg)}",
                file=out,
            )
    plot_path = _resolve_plot_path(args.plot, args.out, "mcms_sweep.png")
    if plot_path:
        from .plotting import plot_sweep

        plot_sweep(records, plot_path)
    return 0


# ---------------------------------------------------------------------------
# ensemble


def ensemble_rows(
    d: int,
    count: int,
    rank: int,
    seed: int,
    oracle_config: OracleConfig | None = None,
) -> tuple[list[EnsembleRow], EnsembleSummary]:
    """Benchmark bound tightness on a seeded random ensemble."""
    state_seeds = np.random.SeedSequence(seed).generate_state(count)
    rows = []
    violations = 0
    for index in range(count):
        rho = states.random_density(d, rank, int(state_seeds[index]))
        bounds = coherence.cg_bounds(rho)
        result = maximize_over_simplex(rho, Objective.FIDELITY, oracle_config)
        oracle_cg = max(0.0, 1.0 - result.value)
        cg_value = bounds.exact if bounds.exact is not None else oracle_cg
        l1_budget, _ = tradeoff.check_l1_tradeoff(rho)
        g_budget, _ = tradeoff.check_geometric_tradeoff(rho, cg_value)
        row = EnsembleRow(
            index=index,
            lower=bounds.lower,
            upper=bounds.upper,
            oracle_cg=oracle_cg,
            gap_lower=oracle_cg - bounds.lower,
            gap_upper=bounds.upper - oracle_cg,
            l1_budget=l1_budget,
            g_budget=g_budget,
        )
        if (
            row.gap_lower < -1e-8
            or row.gap_upper < -1e-6
            or l1_budget > 1.0 + 1e-8
            or g_budget > 1.0 + 1e-6
        ):
            violations += 1
        rows.append(row)
    gaps_lower = [r.gap_lower for r in rows]
    gaps_upper = [r.gap_upper for r in rows]
    summary = EnsembleSummary(
        mean_gap_lower=float(np.mean(gaps_lower)),
        max_gap_lower=float(np.max(gaps_lower)),
        mean_gap_upper=float(np.mean(gaps_upper)),
        max_gap_upper=float(np.max(gaps_upper)),
        violation_count=violations,
    )
    return rows, summary


def _cmd_ensemble(args) -> int:
    if args.d < 2:
        raise BadParameterError(f"BadParameter: --d must be >= 2, got {args.d}")
    if args.count < 1:
        raise BadParameterError(f"BadParameter: --count must be >= 1, got {args.count}")
    rank = args.rank if args.rank is not None else args.d
    if not 1 <= rank <= args.d:
        raise BadParameterError(f"BadParameter: --rank must be in 1..{args.d}, got {rank}")
    rows, summary = ensemble_rows(
        args.d, args.count, rank, args.seed, OracleConfig(n_starts=args.oracle_starts)
    )
    with _open_out(args.out) as out:
        print(ENSEMBLE_HEADER, file=out)
        for r in rows:
            print(
                f"{r.index},{_fmt(r.lower)},{_fmt(r.upper)},{_fmt(r.oracle_cg)},"
                f"{_fmt(r.gap_lower)},{_fmt(r.gap_upper)},{_fmt(r.l1_budget)},"
                f"{_fmt(r.g_budget)},,,,,",
                file=out,
            )
        print(
            f"summary,,,,,,,,{_fmt(summary.mean_gap_lower)},{_fmt(summary.max_gap_lower)},"
            f"{_fmt(summary.mean_gap_upper)},{_fmt(summary.max_gap_upper)},"
            f"{summary.violation_count}",
            file=out,
        )
    plot_path = _resolve_plot_path(args.plot, args.out, "ensemble.png")
    if plot_path:
        from .plotting import plot_ensemble

        plot_ensemble(rows, summary, plot_path)
    return 0


# ---------------------------------------------------------------------------
# gen


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParameterError(f"BadParameter: {message}")


def _cmd_gen(args) -> int:
    kind = args.kind
    if kind == "mcms":
        _require(args.d is not None and args.p is not None, "--kind mcms needs --d and --p")
        matrix = states.mcms(args.d, args.p)
        label = args.label or f"mcms d={args.d} p={args.p}"
    elif kind == "random":
        _require(args.d is not None, "--kind random needs --d")
        rank = args.rank if args.rank is not None else args.d
        matrix = states.random_density(args.d, rank, args.seed)
        label = args.label or f"random d={args.d} rank={rank} seed={args.seed}"
    elif kind == "pure":
        _require(args.d is not None, "--kind pure needs --d")
        matrix = states.random_pure(args.d, args.seed)
        label = args.label or f"pure d={args.d} seed={args.seed}"
    elif kind == "maxcoherent":
        _require(args.d is not None, "--kind maxcoherent needs --d")
        matrix = states.max_coherent_state(args.d)
        label = args.label or f"maxcoherent d={args.d}"
    else:  # incoherent
        _require(args.probs is not None, "--kind incoherent needs --probs")
        try:
            probs = [float(part) for part in args.probs.split(",")]
        except ValueError as err:
            raise BadParameterError(f"BadParameter: unparseable --probs ({err})") from err
        matrix = states.incoherent(probs)
        label = args.label or f"incoherent probs={args.probs}"
    with _open_out(args.out) as out:
        write_state(out, matrix, label)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="geomcoh", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="report measures and bounds for a state file")
    analyze.add_argument("state", help="path to a JSON state file")
    analyze.add_argument("--oracle", choices=("auto", "on", "off"), default="auto",
                         help="run the simplex oracle (auto: only for d <= 8)")
    fmt = analyze.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV output")
    analyze.add_argument("--herm-tol", type=float, default=1e-10)
    analyze.add_argument("--eig-clamp", type=float, default=1e-10)
    analyze.add_argument("--trace-tol", type=float, default=1e-8)
    analyze.add_argument("--oracle-starts", type=int, default=16)
    analyze.set_defaults(handler=_cmd_analyze)

    sweep = sub.add_parser("mcms-sweep", help="bounds across the mcms mixing parameter")
    sweep.add_argument("--d", type=int, required=True)
    sweep.add_argument("--p-min", type=float, default=0.05)
    sweep.add_argument("--p-max", type=float, default=1.0)
    sweep.add_argument("--p-steps", type=int, default=20)
    sweep.add_argument("--oracle", choices=("on", "off"), default="on")
    sweep.add_argument("--oracle-starts", type=int, default=16)
    sweep.add_argument("--out", help="CSV path (default: stdout)")
    sweep.add_argument("--plot", nargs="?", const="", metavar="PATH",
                       help="render the bounds figure (bare flag: next to --out)")
    sweep.set_defaults(handler=_cmd_mcms_sweep)

    ensemble = sub.add_parser("ensemble", help="random-state benchmark of bound tightness")
    ensemble.add_argument("--d", type=int, required=True)
    ensemble.add_argument("--count", type=int, required=True)
    ensemble.add_argument("--rank", type=int, default=None, help="default: full rank")
    ensemble.add_argument("--seed", type=int, default=0)
    ensemble.add_argument("--oracle-starts", type=int, default=16)
    ensemble.add_argument("--out", help="CSV path (default: stdout)")
    ensemble.add_argument("--plot", nargs="?", const="", metavar="PATH",
                          help="render the gap figure (bare flag: next to --out)")
    ensemble.set_defaults(handler=_cmd_ensemble)

    gen = sub.add_parser("gen", help="write a state file for a named family")
    gen.add_argument("--kind", required=True,
                     choices=("mcms", "random", "pure", "maxcoherent", "incoherent"))
    gen.add_argument("--d", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--rank", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--probs", help="comma-separated diagonal, e.g. 0.2,0.3,0.5")
    gen.add_argument("--label")
    gen.add_argument("--out", help="state file path (default: stdout)")
    gen.set_defaults(handler=_cmd_gen)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors exit 5, --help exits 0
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except FileNotFoundError as err:
        print(f"error: FileNotFound: {err}", file=sys.stderr)
        return 3
    except StateFileParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except StateValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except BadParameterError as err:
        print(f"error: {err}", file=sys.stderr)
        return 5
    except OSError as err:
        print(f"error: Io: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
