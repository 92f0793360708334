#!/usr/bin/env python3
"""Compare estimator coverage across synthetic field models.

Generates one field per trial from each requested model, draws a fixed-size
sample without replacement, runs every estimation method on it, and reports
bias, RMSE, and the fraction of trials whose confidence answer covered the
true category count.

Example:
    python3 scripts/method_comparison.py --trials 200 --sample-size 44
    python3 scripts/method_comparison.py --models uniform,log_series \
        --true-categories 12 --field-size 6000 --format json
"""

import argparse
import json
import sys

from richness import FieldModel, RichnessError, run_experiment

DEFAULT_MODELS = "uniform,negative_binomial,log_series"
DEFAULT_METHODS = "fisher,bootstrap,jackknife:1,jackknife:2,jackknife:3"


def build_model(name, true_categories, field_size):
    params = {}
    if name == "negative_binomial":
        params = {"r": 1.0, "mean": field_size / true_categories}
    elif name == "log_series":
        params = {"mean": field_size / true_categories}
    return FieldModel(name, true_categories, field_size, params)


def comparison_table(reports):
    header = f"{'model':<20} {'method':<14} {'mean_est':>9} {'bias':>8} {'rmse':>8} {'coverage':>9}"
    lines = [header, "-" * len(header)]
    for report in reports:
        for method in report.methods:
            lines.append(
                f"{report.model:<20} {method.method:<14} "
                f"{method.mean_estimate:>9.4f} {method.bias:>8.4f} "
                f"{method.rmse:>8.4f} {method.coverage:>9.4f}"
            )
    return "\n".join(lines)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--models", default=DEFAULT_MODELS,
                        help="comma-separated field models to sweep")
    parser.add_argument("--methods", default=DEFAULT_METHODS,
                        help="comma-separated estimation methods")
    parser.add_argument("--true-categories", type=int, default=5)
    parser.add_argument("--field-size", type=int, default=10000)
    parser.add_argument("--sample-size", type=int, default=44)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--risk", type=float, default=0.05)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--replicates", type=int, default=200,
                        help="bootstrap replicates per trial")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    args = parser.parse_args(argv)

    models = [m.strip() for m in args.models.split(",") if m.strip()]
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]

    reports = []
    for name in models:
        model = build_model(name, args.true_categories, args.field_size)
        reports.append(run_experiment(
            model, args.sample_size, args.trials, methods,
            risk=args.risk, seed=args.seed, replicates=args.replicates))

    if args.format == "json":
        print(json.dumps([r.as_dict() for r in reports], indent=2))
    else:
        print(comparison_table(reports))
    return 0


if __name__ == "__main__":
    try:
        sys.exit(main())
    except RichnessError as exc:
        print(f"method_comparison: error: {exc}", file=sys.stderr)
        sys.exit(1)
