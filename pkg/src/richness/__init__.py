"""Richness estimation: how many categories does a population hold?

Given an abundance sample (counts of individuals per observed
category), this package estimates the true number of categories three
ways (Fisher's log-series alpha, bootstrap resampling, delete-k
jackknife), attaches a variance to each estimate, and turns the pairs
into normal-approximation upper bounds: "at most C_max categories at
the chosen risk".  A Monte-Carlo field simulator measures each method's
bias, RMSE and coverage against synthetic populations with a known
category count.
"""

from ._version import __version__
from .errors import RichnessError
from .analysis import (
    DEFAULT_METHODS,
    MethodSpec,
    build_report,
    parse_method,
    run_method,
)
from .bootstrap import (
    BootstrapConfig,
    BootstrapResult,
    bootstrap_moments_exact,
    bootstrap_richness,
)
from .fieldsim import (
    CoverageReport,
    FieldModel,
    MethodCoverage,
    Scenario,
    SyntheticField,
    generate_field,
    load_scenario,
    render_coverage,
    run_experiment,
    run_scenario,
    sample_field,
)
from .fisher import FisherFit, solve_alpha, variance_limit, variance_of_richness
from .inference import (
    ONE_SIDED,
    TWO_SIDED,
    ConfidenceAnswer,
    normal_cdf,
    normal_quantile,
    upper_bound,
)
from .io import (
    Provenance,
    ReportDocument,
    RichnessEstimate,
    load_bundled_sample,
    parse_abundance,
    render_report,
    report_from_json,
)
from .jackknife import (
    JackknifeResult,
    jackknife_closed_form,
    jackknife_enumerated,
)
from .sample import AbundanceSample, FrequencyCounts, frequency_counts, validate
from .selftest import run_selftest

__all__ = [
    "__version__",
    "AbundanceSample",
    "BootstrapConfig",
    "BootstrapResult",
    "ConfidenceAnswer",
    "CoverageReport",
    "DEFAULT_METHODS",
    "FieldModel",
    "FisherFit",
    "FrequencyCounts",
    "JackknifeResult",
    "MethodCoverage",
    "MethodSpec",
    "ONE_SIDED",
    "Provenance",
    "ReportDocument",
    "RichnessError",
    "RichnessEstimate",
    "Scenario",
    "SyntheticField",
    "TWO_SIDED",
    "bootstrap_moments_exact",
    "bootstrap_richness",
    "build_report",
    "frequency_counts",
    "generate_field",
    "jackknife_closed_form",
    "jackknife_enumerated",
    "load_bundled_sample",
    "load_scenario",
    "normal_cdf",
    "normal_quantile",
    "parse_abundance",
    "parse_method",
    "render_coverage",
    "render_report",
    "report_from_json",
    "run_experiment",
    "run_method",
    "run_scenario",
    "run_selftest",
    "sample_field",
    "solve_alpha",
    "upper_bound",
    "validate",
    "variance_limit",
    "variance_of_richness",
]
