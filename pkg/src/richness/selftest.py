"""Built-in verification against stored expected values.

Runs the bundled flower sample through every method and compares the
results with the values frozen here (point estimates, variances,
quantiles, upper bounds, and the integer answers), plus structural
checks such as the agreement of the two jackknife routes.  This is the
same battery the acceptance tests pin down, packaged so an installed
copy can vouch for itself.

Note on the order-2 jackknife bound: the stored value 7.2484 is the one
implied by estimate 5.9545, sd 0.6601 and quantile 1.96; it is kept
self-consistent with those inputs rather than with any rounded
presentation of them.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .bootstrap import BootstrapConfig, bootstrap_moments_exact, bootstrap_richness
from .errors import RichnessError
from .fisher import solve_alpha, variance_limit, variance_of_richness
from .inference import ONE_SIDED, TWO_SIDED, normal_quantile, upper_bound
from .io import load_bundled_sample, parse_abundance
from .jackknife import jackknife_closed_form, jackknife_enumerated
from .sample import AbundanceSample

_FIXTURE_COUNTS = (14, 10, 10, 9, 1)

# Expected values with their tolerances.  Estimates and variances are
# the published figures for the worked example; bounds are computed
# from them; the bootstrap Monte-Carlo pair is the deterministic result
# for the default configuration (200 replicates, seed 42).
_ALPHA = (1.451889, 1e-5)
_FISHER_VAR_AT_N = (0.938, 1e-3)
_FISHER_VAR_LIMIT = (1.007, 1e-3)
_FISHER_BOUND = (6.9662, 1e-2)
_JACKKNIFE = {
    1: {"estimate": (5.977, 5e-4), "variance": (0.955, 1e-3),
        "std_dev": (0.9773, 5e-4), "bound": (7.8927, 1e-2), "c_max": 8},
    2: {"estimate": (5.9545, 5e-4), "variance": (0.4358, 1e-3),
        "std_dev": (0.6601, 1e-3), "bound": (7.2484, 1e-2), "c_max": 8},
    3: {"estimate": (5.932, 5e-4), "variance": (0.270, 1e-3),
        "std_dev": (0.5194, 5e-4), "bound": (6.9498, 1e-2), "c_max": 7},
}
_QUANTILE_TWO_SIDED = (1.959964, 1e-6)
_QUANTILE_ONE_SIDED = (1.644854, 1e-6)
_BOOTSTRAP_EXACT_MEAN = (4.636274961280397, 1e-9)
_BOOTSTRAP_EXACT_VARIANCE = (0.23146555372490987, 1e-9)
_BOOTSTRAP_MC_ESTIMATE = (4.63, 1e-9)
_BOOTSTRAP_MC_VARIANCE = (0.23427135678391958, 1e-9)
_BOOTSTRAP_C_MAX_TWO_SIDED = 6
_BOOTSTRAP_C_MAX_ONE_SIDED = 6
_DUAL_ROUTE_RTOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str


def _value_check(name: str, actual: float, expected: tuple[float, float]) -> CheckResult:
    target, tol = expected
    return CheckResult(
        name=name,
        passed=abs(actual - target) <= tol,
        expected=f"{target} within {tol}",
        actual=f"{actual:.10f}",
    )


def _int_check(name: str, actual: int, expected: int) -> CheckResult:
    return CheckResult(name, actual == expected, str(expected), str(actual))


def run_checks(sample: AbundanceSample) -> list[CheckResult]:
    """All named checks, evaluated on the given sample."""
    checks = [CheckResult(
        name="fixture_counts",
        passed=(tuple(sorted(sample.counts, reverse=True)) == _FIXTURE_COUNTS),
        expected=f"counts {_FIXTURE_COUNTS}",
        actual=f"counts {tuple(sorted(sample.counts, reverse=True))}",
    )]

    fit = solve_alpha(sample.richness, sample.size)
    limit = variance_limit(fit)
    checks.append(_value_check("fisher_alpha", fit.alpha, _ALPHA))
    checks.append(_value_check("fisher_variance_at_n",
                               variance_of_richness(fit, sample.size),
                               _FISHER_VAR_AT_N))
    checks.append(_value_check("fisher_variance_limit", limit, _FISHER_VAR_LIMIT))
    fisher_answer = upper_bound("fisher", float(sample.richness), limit,
                                risk=0.05, sidedness=TWO_SIDED)
    checks.append(_value_check("fisher_upper_bound",
                               fisher_answer.upper_bound, _FISHER_BOUND))
    checks.append(_int_check("fisher_c_max", fisher_answer.c_max, 7))

    worst_gap = 0.0
    for order, expected in _JACKKNIFE.items():
        closed = jackknife_closed_form(sample, order)
        enumerated = jackknife_enumerated(sample, order)
        worst_gap = max(
            worst_gap,
            abs(closed.estimate - enumerated.estimate) / abs(enumerated.estimate),
            abs(closed.variance - enumerated.variance) / abs(enumerated.variance),
        )
        answer = upper_bound(f"jackknife:{order}", closed.estimate, closed.variance,
                             risk=0.05, sidedness=TWO_SIDED)
        prefix = f"jackknife{order}"
        checks.append(_value_check(f"{prefix}_estimate", closed.estimate,
                                   expected["estimate"]))
        checks.append(_value_check(f"{prefix}_variance", closed.variance,
                                   expected["variance"]))
        checks.append(_value_check(f"{prefix}_std_dev", math.sqrt(closed.variance),
                                   expected["std_dev"]))
        checks.append(_value_check(f"{prefix}_upper_bound", answer.upper_bound,
                                   expected["bound"]))
        checks.append(_int_check(f"{prefix}_c_max", answer.c_max, expected["c_max"]))
    checks.append(CheckResult(
        name="jackknife_dual_route",
        passed=worst_gap <= _DUAL_ROUTE_RTOL,
        expected=f"relative gap <= {_DUAL_ROUTE_RTOL}",
        actual=f"{worst_gap:.3e}",
    ))

    checks.append(_value_check("quantile_two_sided_5pct",
                               normal_quantile(0.975), _QUANTILE_TWO_SIDED))
    checks.append(_value_check("quantile_one_sided_5pct",
                               normal_quantile(0.95), _QUANTILE_ONE_SIDED))

    exact_mean, exact_variance = bootstrap_moments_exact(sample)
    checks.append(_value_check("bootstrap_exact_mean", exact_mean,
                               _BOOTSTRAP_EXACT_MEAN))
    checks.append(_value_check("bootstrap_exact_variance", exact_variance,
                               _BOOTSTRAP_EXACT_VARIANCE))
    mc = bootstrap_richness(sample, BootstrapConfig())
    checks.append(_value_check("bootstrap_mc_estimate", mc.estimate,
                               _BOOTSTRAP_MC_ESTIMATE))
    checks.append(_value_check("bootstrap_mc_variance", mc.variance,
                               _BOOTSTRAP_MC_VARIANCE))
    two = upper_bound("bootstrap", mc.estimate, mc.variance, 0.05, TWO_SIDED)
    one = upper_bound("bootstrap", mc.estimate, mc.variance, 0.05, ONE_SIDED)
    checks.append(_int_check("bootstrap_c_max_two_sided", two.c_max,
                             _BOOTSTRAP_C_MAX_TWO_SIDED))
    checks.append(_int_check("bootstrap_c_max_one_sided", one.c_max,
                             _BOOTSTRAP_C_MAX_ONE_SIDED))
    return checks


def run_selftest(*, verbose: bool = False, data_path: str | None = None,
                 stream=None) -> int:
    """Run all checks; print failures (all checks when verbose).

    Returns 0 when every check passes, 1 otherwise.
    """
    out = stream if stream is not None else sys.stdout
    try:
        if data_path is None:
            sample = load_bundled_sample()
        else:
            sample = parse_abundance(Path(data_path).read_text(encoding="utf-8"))
    except (RichnessError, OSError) as exc:
        print(f"FAIL fixture_load: {exc}", file=out)
        print("selftest: 0/1 checks passed", file=out)
        return 1
    checks = run_checks(sample)
    passed = sum(1 for check in checks if check.passed)
    for check in checks:
        if check.passed and not verbose:
            continue
        status = "ok  " if check.passed else "FAIL"
        print(f"{status} {check.name}: expected {check.expected}, "
              f"actual {check.actual}", file=out)
    print(f"selftest: {passed}/{len(checks)} checks passed", file=out)
    return 0 if passed == len(checks) else 1
