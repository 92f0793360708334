"""Command-line front end: estimate, simulate, selftest.

Exit codes: 0 success, 1 selftest failure, 2 usage error, 3 input or
scenario parse error, 4 computation error.  Reports go to stdout,
diagnostics to stderr.  Identical invocations (flags, files, seed)
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from ._version import __version__
from .analysis import DEFAULT_METHODS, DEFAULT_RISK, build_report, parse_method
from .bootstrap import DEFAULT_REPLICATES, DEFAULT_SEED
from .errors import RichnessError
from .fieldsim import load_scenario, render_coverage, run_scenario
from .inference import SIDEDNESS, TWO_SIDED
from .io import parse_abundance, render_report
from .selftest import run_selftest

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_COMPUTE = 4

DEFAULT_ORDERS = (1, 2, 3)


@dataclass(frozen=True)
class CliConfig:
    """Resolved invocation settings for one command."""

    command: str
    input_path: str | None = None
    input_format: str = "csv"
    methods: tuple[str, ...] = DEFAULT_METHODS
    risk: float = DEFAULT_RISK
    sidedness: str = TWO_SIDED
    replicates: int = DEFAULT_REPLICATES
    seed: int = DEFAULT_SEED
    output_format: str = "table"
    scenario: str | None = None
    data: str | None = None
    verbose: bool = False


def _error(message: str) -> None:
    print(f"richness: error: {message}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="richness",
        description="Estimate how many categories a sampled population holds.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    est = sub.add_parser(
        "estimate",
        help="run the estimators on a label,count table and report bounds")
    est.add_argument("--input", required=True,
                     help="path of the abundance table, or - for stdin")
    est.add_argument("--input-format", choices=("csv", "tsv"), default="csv",
                     help="delimiter of the input table (default csv)")
    est.add_argument("--methods", action="append", metavar="TOKENS",
                     help="comma-separated method tokens (fisher, bootstrap, "
                          "jackknife:k); default: fisher, bootstrap and the "
                          "selected jackknife orders")
    est.add_argument("--jackknife-orders", default="1,2,3", metavar="K,K,...",
                     help="jackknife orders used when --methods is absent "
                          "(default 1,2,3)")
    est.add_argument("--risk", type=float, default=DEFAULT_RISK,
                     help="risk level for the upper bounds (default 0.05)")
    est.add_argument("--sidedness", choices=SIDEDNESS, default=TWO_SIDED,
                     help="bound type; with two_sided the bootstrap also "
                          "reports a one_sided row")
    est.add_argument("--replicates", type=int, default=DEFAULT_REPLICATES,
                     help="bootstrap replicate count (default 200)")
    est.add_argument("--seed", type=int, default=DEFAULT_SEED,
                     help="bootstrap seed (default 42)")
    est.add_argument("--format", choices=("table", "json", "csv"),
                     default="table", help="report format (default table)")

    sim = sub.add_parser(
        "simulate",
        help="run a field-simulation scenario and report per-method coverage")
    sim.add_argument("--scenario", required=True,
                     help="path of a TOML scenario file")
    sim.add_argument("--format", choices=("table", "json"), default="table",
                     help="report format (default table)")

    self_parser = sub.add_parser(
        "selftest",
        help="check the installed package against stored expected values")
    self_parser.add_argument("--verbose", action="store_true",
                             help="list every check, not only failures")
    self_parser.add_argument("--data", default=None,
                             help="override the bundled sample CSV")
    return parser


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise RichnessError(f"jackknife orders must be integers, got {text!r}") from None
    if not orders:
        raise RichnessError("no jackknife orders given")
    for order in orders:
        if order < 1:
            raise RichnessError(f"jackknife order must be >= 1, got {order}")
    return orders


def _method_tokens(namespace: argparse.Namespace) -> tuple[str, ...]:
    if namespace.methods:
        tokens = tuple(
            token.strip()
            for chunk in namespace.methods
            for token in chunk.split(",")
            if token.strip()
        )
        if not tokens:
            raise RichnessError("no methods given")
    else:
        orders = _parse_orders(namespace.jackknife_orders)
        tokens = ("fisher", "bootstrap",
                  *(f"jackknife:{order}" for order in orders))
    for token in tokens:
        parse_method(token)
    return tokens


def _estimate_config(namespace: argparse.Namespace) -> CliConfig:
    if not 0.0 < namespace.risk < 1.0:
        raise RichnessError(f"risk must lie in (0, 1), got {namespace.risk}")
    if namespace.replicates < 2:
        raise RichnessError(f"replicates must be >= 2, got {namespace.replicates}")
    if namespace.seed < 0:
        raise RichnessError(f"seed must be non-negative, got {namespace.seed}")
    return CliConfig(
        command="estimate",
        input_path=namespace.input,
        input_format=namespace.input_format,
        methods=_method_tokens(namespace),
        risk=namespace.risk,
        sidedness=namespace.sidedness,
        replicates=namespace.replicates,
        seed=namespace.seed,
        output_format=namespace.format,
    )


def cmd_estimate(cfg: CliConfig) -> int:
    try:
        if cfg.input_path == "-":
            text = sys.stdin.read()
        else:
            text = Path(cfg.input_path).read_text(encoding="utf-8")
    except OSError as exc:
        _error(f"cannot read {cfg.input_path}: {exc}")
        return EXIT_PARSE
    try:
        sample = parse_abundance(text, cfg.input_format)
    except RichnessError as exc:
        _error(f"{cfg.input_path}: {exc}")
        return EXIT_PARSE
    try:
        doc = build_report(sample, cfg.methods, risk=cfg.risk,
                           sidedness=cfg.sidedness, replicates=cfg.replicates,
                           seed=cfg.seed)
        output = render_report(doc, cfg.output_format)
    except (RichnessError, ArithmeticError) as exc:
        _error(str(exc))
        return EXIT_COMPUTE
    sys.stdout.write(output)
    return EXIT_OK


def cmd_simulate(cfg: CliConfig) -> int:
    try:
        scenario = load_scenario(cfg.scenario)
    except OSError as exc:
        _error(f"cannot read {cfg.scenario}: {exc}")
        return EXIT_PARSE
    except RichnessError as exc:
        _error(f"{cfg.scenario}: {exc}")
        return EXIT_PARSE
    try:
        report = run_scenario(scenario)
        output = render_coverage(report, cfg.output_format)
    except (RichnessError, ArithmeticError) as exc:
        _error(str(exc))
        return EXIT_COMPUTE
    sys.stdout.write(output)
    return EXIT_OK


def cmd_selftest(cfg: CliConfig) -> int:
    return run_selftest(verbose=cfg.verbose, data_path=cfg.data)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help/--version and 2 for usage errors
        return int(exc.code) if exc.code else EXIT_OK
    if namespace.command == "estimate":
        try:
            cfg = _estimate_config(namespace)
        except RichnessError as exc:
            _error(str(exc))
            return EXIT_USAGE
        return cmd_estimate(cfg)
    if namespace.command == "simulate":
        cfg = CliConfig(command="simulate", scenario=namespace.scenario,
                        output_format=namespace.format)
        return cmd_simulate(cfg)
    cfg = CliConfig(command="selftest", verbose=namespace.verbose,
                    data=namespace.data)
    return cmd_selftest(cfg)


def entrypoint() -> None:
    raise SystemExit(main())
