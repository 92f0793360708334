"""Monte-Carlo harness for judging estimators against a known field.

A synthetic "field" is a finite population with a known number of
categories.  Each trial draws a sample without replacement, runs the
selected estimators, and turns each (estimate, variance) pair into the
integer answer C_max.  Aggregated over trials this yields bias, RMSE,
and coverage (how often C_max is at least the true category count),
which is the evidence for choosing between the methods.

Abundance models:

- ``uniform``: the field size split as evenly as possible.
- ``explicit``: abundances given verbatim in ``model_params``.
- ``negative_binomial``: per-category abundances from a Gamma-mixed
  Poisson (parameters ``r`` and ``mean``), redrawn until positive.
- ``log_series``: per-category abundances from the log-series law
  (parameter ``p``, or derived from the target mean abundance).

Determinism: every random decision flows from a seed through named
substreams (one per trial for generation, one per trial for sampling,
one per method for bootstrap replicates), so results do not depend on
evaluation order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from ._rng import derive_seed, substream
from .analysis import parse_method, run_method
from .errors import (
    InfeasibleModelError,
    InvalidInputError,
    InvalidProbabilityError,
    SampleTooLargeError,
)
from .inference import TWO_SIDED, upper_bound
from .sample import AbundanceSample, validate

UNIFORM = "uniform"
EXPLICIT = "explicit"
NEGATIVE_BINOMIAL = "negative_binomial"
LOG_SERIES = "log_series"
MODELS = (UNIFORM, EXPLICIT, NEGATIVE_BINOMIAL, LOG_SERIES)

# Allowed model_params keys per model; anything else is a typo we refuse.
_PARAM_KEYS = {
    UNIFORM: frozenset(),
    EXPLICIT: frozenset({"abundances"}),
    NEGATIVE_BINOMIAL: frozenset({"r", "mean"}),
    LOG_SERIES: frozenset({"p", "mean"}),
}

_MAX_REDRAWS = 10_000


@dataclass(frozen=True)
class FieldModel:
    """Recipe for a synthetic field with a known category count.

    ``field_size`` is exact for the uniform and explicit models and a
    target for the stochastic ones (it sets the default mean abundance;
    the realized population size is whatever the draws sum to).
    """

    model: str
    true_categories: int
    field_size: int
    model_params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.model not in MODELS:
            raise InvalidInputError(f"model must be one of {MODELS}, got {self.model!r}")
        if self.true_categories < 1:
            raise InvalidInputError(
                f"true_categories must be positive, got {self.true_categories}")
        if self.field_size < self.true_categories:
            raise InvalidInputError(
                f"field_size {self.field_size} is below true_categories "
                f"{self.true_categories}")
        unknown = set(self.model_params) - _PARAM_KEYS[self.model]
        if unknown:
            raise InvalidInputError(
                f"unknown model_params for {self.model}: {sorted(unknown)}")
        if self.model == EXPLICIT:
            abundances = self.model_params.get("abundances")
            if not abundances:
                raise InvalidInputError("explicit model requires an 'abundances' list")
            if len(abundances) != self.true_categories:
                raise InvalidInputError(
                    f"expected {self.true_categories} abundances, "
                    f"got {len(abundances)}")
            for value in abundances:
                if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                    raise InvalidInputError(
                        f"abundances must be positive integers, got {value!r}")
            if sum(abundances) != self.field_size:
                raise InvalidInputError(
                    f"abundances sum to {sum(abundances)}, not field_size "
                    f"{self.field_size}")
        if self.model == NEGATIVE_BINOMIAL:
            r = self.model_params.get("r", 1.0)
            if not r > 0.0:
                raise InvalidInputError(f"negative binomial r must be > 0, got {r!r}")
        mean = self.model_params.get("mean")
        if mean is not None and not mean > 0.0:
            raise InvalidInputError(f"mean abundance must be > 0, got {mean!r}")
        p = self.model_params.get("p")
        if p is not None and not 0.0 < p < 1.0:
            raise InvalidInputError(f"log-series p must lie in (0, 1), got {p!r}")

    @property
    def mean_abundance(self) -> float:
        """Target mean individuals per category."""
        return self.model_params.get("mean", self.field_size / self.true_categories)


@dataclass(frozen=True)
class SyntheticField:
    """A realized finite population: one abundance per category."""

    labels: tuple[str, ...]
    abundances: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.abundances) or not self.labels:
            raise InvalidInputError("labels and abundances must be equal-length and non-empty")
        for value in self.abundances:
            if value < 1:
                raise InvalidInputError(f"field abundances must be >= 1, got {value}")

    @property
    def true_categories(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return sum(self.abundances)


def _labels(count: int) -> tuple[str, ...]:
    width = len(str(count))
    return tuple(f"cat{i:0{width}d}" for i in range(1, count + 1))


def _log_series_p_for_mean(mean: float) -> float:
    """Invert the log-series mean -p / ((1-p) ln(1-p)) by bisection.

    The law's support starts at 1, so only means above 1 are reachable.
    """
    if mean <= 1.0 + 1e-9:
        raise InfeasibleModelError(
            f"log-series mean abundance must exceed 1, got {mean}")

    def mean_at(p: float) -> float:
        return -p / ((1.0 - p) * math.log1p(-p))

    lo, hi = 1e-12, 1.0 - 1e-12
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mean_at(mid) < mean:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _positive_draw(draw, label: str) -> int:
    """Repeat ``draw`` until it returns a positive count.

    A field category with zero members is not a category, so zero draws
    are rejected (truncation at 1).  A bounded number of rounds guards
    against parameter choices whose mass sits almost entirely at zero.
    """
    for _ in range(_MAX_REDRAWS):
        value = int(draw())
        if value >= 1:
            return value
    raise InfeasibleModelError(
        f"no positive abundance for {label} within {_MAX_REDRAWS} redraws")


def generate_field(m: FieldModel, seed: int) -> SyntheticField:
    """Realize a field from the model; deterministic given the seed."""
    labels = _labels(m.true_categories)
    if m.model == UNIFORM:
        base, extra = divmod(m.field_size, m.true_categories)
        abundances = tuple(base + (1 if i < extra else 0)
                           for i in range(m.true_categories))
    elif m.model == EXPLICIT:
        abundances = tuple(m.model_params["abundances"])
    elif m.model == NEGATIVE_BINOMIAL:
        rng = substream(seed)
        r = float(m.model_params.get("r", 1.0))
        scale = m.mean_abundance / r
        abundances = tuple(
            _positive_draw(lambda: rng.poisson(rng.gamma(r, scale)), label)
            for label in labels
        )
    else:
        rng = substream(seed)
        if "p" in m.model_params:
            p = float(m.model_params["p"])
        else:
            p = _log_series_p_for_mean(m.mean_abundance)
        abundances = tuple(
            _positive_draw(lambda: rng.logseries(p), label) for label in labels
        )
    return SyntheticField(labels=labels, abundances=abundances)


def sample_field(f: SyntheticField, n: int, seed: int) -> AbundanceSample:
    """Simple random sample of ``n`` individuals without replacement.

    Categories that do not appear in the draw are absent from the
    returned sample, exactly as a real observer would record it.
    """
    if n < 1:
        raise InvalidInputError(f"sample size must be positive, got {n}")
    if n > f.size:
        raise SampleTooLargeError(
            f"sample size {n} exceeds field population {f.size}")
    rng = substream(seed)
    counts = rng.multivariate_hypergeometric(f.abundances, n)
    return validate(
        (label, int(count)) for label, count in zip(f.labels, counts) if count > 0
    )


@dataclass(frozen=True)
class MethodCoverage:
    """Aggregate performance of one method across trials."""

    method: str
    trials: int
    mean_estimate: float
    bias: float
    rmse: float
    mean_c_max: float
    coverage: float

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "trials": self.trials,
            "mean_estimate": self.mean_estimate,
            "bias": self.bias,
            "rmse": self.rmse,
            "mean_c_max": self.mean_c_max,
            "coverage": self.coverage,
        }


@dataclass(frozen=True)
class CoverageReport:
    """Per-method bias, RMSE and coverage for one experiment."""

    model: str
    true_categories: int
    field_size: int
    sample_size: int
    trials: int
    risk: float
    seed: int
    methods: tuple[MethodCoverage, ...]
    # model parameters are echoed so a report states which distribution
    # settings produced it even when they were library defaults
    model_params: tuple = ()

    def as_dict(self) -> dict:
        return {
            "schema": "richness-coverage",
            "schema_version": 1,
            "model": self.model,
            "model_params": {key: (list(value) if isinstance(value, tuple)
                                   else value)
                             for key, value in self.model_params},
            "true_categories": self.true_categories,
            "field_size": self.field_size,
            "sample_size": self.sample_size,
            "trials": self.trials,
            "risk": self.risk,
            "seed": self.seed,
            "methods": [m.as_dict() for m in self.methods],
        }


def run_experiment(m: FieldModel, n: int, trials: int, methods: list,
                   risk: float = 0.05, seed: int = 42, *,
                   replicates: int = 200) -> CoverageReport:
    """Generate, sample and estimate ``trials`` times; aggregate.

    Coverage counts the trials whose C_max (two-sided upper bound at
    ``risk``) reaches the true category count.  ``replicates`` is passed
    to the bootstrap when it is among the methods.
    """
    if trials < 1:
        raise InvalidInputError(f"trials must be positive, got {trials}")
    if not 0.0 < risk < 1.0:
        raise InvalidProbabilityError(f"risk must lie in (0, 1), got {risk!r}")
    if not methods:
        raise InvalidInputError("methods list is empty")
    specs = [parse_method(token) for token in methods]

    estimates: dict[str, list[float]] = {spec.token: [] for spec in specs}
    hits: dict[str, int] = {spec.token: 0 for spec in specs}
    c_maxes: dict[str, list[int]] = {spec.token: [] for spec in specs}
    true = m.true_categories
    for trial in range(trials):
        synthetic = generate_field(m, derive_seed(seed, trial, 0))
        observed = sample_field(synthetic, n, derive_seed(seed, trial, 1))
        for index, spec in enumerate(specs):
            row = run_method(spec, observed, replicates=replicates,
                             seed=derive_seed(seed, trial, 2, index))
            answer = upper_bound(row.method, row.estimate, row.variance,
                                 risk=risk, sidedness=TWO_SIDED)
            estimates[spec.token].append(row.estimate)
            c_maxes[spec.token].append(answer.c_max)
            if answer.c_max >= true:
                hits[spec.token] += 1

    per_method = []
    for spec in specs:
        values = estimates[spec.token]
        mean = math.fsum(values) / trials
        rmse = math.sqrt(math.fsum((v - true) ** 2 for v in values) / trials)
        per_method.append(MethodCoverage(
            method=spec.token,
            trials=trials,
            mean_estimate=mean,
            bias=mean - true,
            rmse=rmse,
            mean_c_max=math.fsum(c_maxes[spec.token]) / trials,
            coverage=hits[spec.token] / trials,
        ))
    return CoverageReport(
        model=m.model,
        true_categories=true,
        field_size=m.field_size,
        sample_size=n,
        trials=trials,
        risk=risk,
        seed=seed,
        methods=tuple(per_method),
        model_params=tuple(sorted(
            (key, tuple(value) if isinstance(value, (list, tuple)) else value)
            for key, value in m.model_params.items())),
    )


@dataclass(frozen=True)
class Scenario:
    """A complete simulation request as loaded from a TOML file.

    Layout::

        [field]
        model = "explicit"          # uniform | explicit | negative_binomial | log_series
        true_categories = 5
        field_size = 10000
        [field.params]              # model-specific; see FieldModel
        abundances = [3182, 2273, 2273, 2045, 227]
        [experiment]
        sample_size = 44
        trials = 1000
        risk = 0.05
        seed = 7
        replicates = 200
        methods = ["fisher", "bootstrap", "jackknife:1"]
    """

    field: FieldModel
    sample_size: int
    trials: int
    methods: tuple[str, ...]
    risk: float = 0.05
    seed: int = 42
    replicates: int = 200


def scenario_from_dict(data: dict) -> Scenario:
    """Build a Scenario from parsed TOML data, validating the layout."""
    try:
        field_table = dict(data["field"])
        experiment = dict(data["experiment"])
        model = FieldModel(
            model=field_table.pop("model"),
            true_categories=field_table.pop("true_categories"),
            field_size=field_table.pop("field_size"),
            model_params=dict(field_table.pop("params", {})),
        )
        if field_table:
            raise InvalidInputError(
                f"unknown [field] keys: {sorted(field_table)}")
        scenario = Scenario(
            field=model,
            sample_size=int(experiment.pop("sample_size")),
            trials=int(experiment.pop("trials")),
            methods=tuple(experiment.pop("methods")),
            risk=float(experiment.pop("risk", 0.05)),
            seed=int(experiment.pop("seed", 42)),
            replicates=int(experiment.pop("replicates", 200)),
        )
        if experiment:
            raise InvalidInputError(
                f"unknown [experiment] keys: {sorted(experiment)}")
    except KeyError as exc:
        raise InvalidInputError(f"scenario is missing required key {exc}") from exc
    for token in scenario.methods:
        parse_method(token)
    return scenario


def load_scenario(path) -> Scenario:
    """Read and validate a TOML scenario file."""
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    with open(path, "rb") as handle:
        try:
            data = tomllib.load(handle)
        except tomllib.TOMLDecodeError as exc:
            raise InvalidInputError(f"invalid scenario TOML: {exc}") from exc
    return scenario_from_dict(data)


def run_scenario(scenario: Scenario) -> CoverageReport:
    """Convenience wrapper wiring a Scenario into run_experiment."""
    return run_experiment(
        scenario.field,
        scenario.sample_size,
        scenario.trials,
        list(scenario.methods),
        risk=scenario.risk,
        seed=scenario.seed,
        replicates=scenario.replicates,
    )


def render_coverage(report: CoverageReport, fmt: str = "table") -> str:
    """Render a coverage report as an aligned table or as JSON."""
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=2) + "\n"
    if fmt != "table":
        raise InvalidInputError(f"format must be 'table' or 'json', got {fmt!r}")
    params = " ".join(
        f"{key}={list(value) if isinstance(value, tuple) else value}"
        for key, value in report.model_params)
    lines = [
        f"Field: model={report.model}, true categories={report.true_categories}, "
        f"size={report.field_size}" + (f", params: {params}" if params else ""),
        f"Experiment: sample size={report.sample_size}, trials={report.trials}, "
        f"risk={report.risk:g}, seed={report.seed}",
        "",
    ]
    header = ("method", "mean_estimate", "bias", "rmse", "mean_c_max", "coverage")
    rows = [
        (m.method, f"{m.mean_estimate:.4f}", f"{m.bias:.4f}", f"{m.rmse:.4f}",
         f"{m.mean_c_max:.4f}", f"{m.coverage:.4f}")
        for m in report.methods
    ]
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
              for i in range(len(header))]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip())
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i])
                               for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"
