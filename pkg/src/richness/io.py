"""Input parsing, report assembly types, and report rendering.

The report mirrors the two-table shape of the worked flower example:
an estimates table (method, point estimate, variance) and an answers
table (upper confidence bound and the integer C_max per method), plus
the sample summary and the provenance needed to reproduce a run
(seed, bootstrap replicate count, tool version).

Formats:

- ``table``: aligned human-readable text; every real number is printed
  with exactly four decimals, never in scientific notation.
- ``json``: versioned machine schema; floats round-trip exactly
  (``report_from_json(render_report(doc, "json")) == doc``).
- ``csv``: flat rows, one line per estimate and per answer.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
from dataclasses import dataclass
from importlib import resources

from .errors import InvalidInputError, ParseError
from .inference import ConfidenceAnswer
from .sample import AbundanceSample, validate

SCHEMA_NAME = "richness-report"
SCHEMA_VERSION = 1

_DELIMITERS = {"csv": ",", "tsv": "\t"}


@dataclass(frozen=True)
class RichnessEstimate:
    """One estimates-table row: a method's point estimate and variance.

    ``params`` holds method-specific extras (Fisher's alpha, jackknife
    order, bootstrap seed) as ordered key/value pairs.
    """

    method: str
    estimate: float
    variance: float
    params: tuple[tuple[str, object], ...] = ()

    @property
    def std_dev(self) -> float:
        return math.sqrt(self.variance)

    def params_dict(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class Provenance:
    """What a reader needs to reproduce the run exactly."""

    seed: int
    replicates: int
    version: str


@dataclass(frozen=True)
class ReportDocument:
    """A complete analysis of one sample, ready to render."""

    sample: AbundanceSample
    estimates: tuple[RichnessEstimate, ...]
    answers: tuple[ConfidenceAnswer, ...]
    provenance: Provenance


def parse_abundance(text: str, fmt: str = "csv") -> AbundanceSample:
    """Parse two-column (label, count) text into a validated sample.

    The delimiter follows ``fmt`` ("csv" or "tsv").  A first row whose
    second column is not an integer is treated as a header.  Fields are
    whitespace-tolerant; blank lines are skipped; newline style does not
    matter.  Raises :class:`ParseError` with a line number, then the
    sample validators' errors (duplicate label, non-positive count).
    """
    if fmt not in _DELIMITERS:
        raise InvalidInputError(f"format must be one of {tuple(_DELIMITERS)}, got {fmt!r}")
    pairs: list[tuple[str, int]] = []
    reader = csv.reader(text.splitlines(), delimiter=_DELIMITERS[fmt])
    for line_number, row in enumerate(reader, start=1):
        cells = [cell.strip() for cell in row]
        if not any(cells):
            continue
        if len(cells) != 2:
            raise ParseError(line_number, f"expected 2 columns, found {len(cells)}")
        label, raw_count = cells
        try:
            count = int(raw_count)
        except ValueError:
            if not pairs and line_number == 1:
                continue
            raise ParseError(
                line_number, f"count is not an integer: {raw_count!r}") from None
        if not label:
            raise ParseError(line_number, "empty category label")
        pairs.append((label, count))
    if not pairs:
        raise ParseError(0, "no data rows found")
    return validate(pairs)


def _fmt(value: float) -> str:
    """Fixed four-decimal rendering used by every table cell."""
    return f"{value:.4f}"


def _params_text(params: tuple[tuple[str, object], ...]) -> str:
    parts = []
    for key, value in params:
        if isinstance(value, float):
            parts.append(f"{key}={_fmt(value)}")
        else:
            parts.append(f"{key}={value}")
    return " ".join(parts)


def _aligned(header: tuple[str, ...], rows: list[tuple[str, ...]]) -> list[str]:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return lines


def _render_table(doc: ReportDocument) -> str:
    sample = doc.sample
    entries = ", ".join(f"{label} {count}" for label, count in sample.entries)
    lines = [
        f"Sample: {sample.size} individuals in {sample.richness} categories",
        f"  {entries}",
        "",
        "Estimates",
    ]
    estimate_rows = [
        (e.method, _fmt(e.estimate), _fmt(e.variance), _fmt(e.std_dev),
         _params_text(e.params))
        for e in doc.estimates
    ]
    lines += _aligned(("method", "estimate", "variance", "std_dev", "params"),
                      estimate_rows)
    lines += ["", "Answers (upper bound on the true category count)"]
    answer_rows = [
        (a.method, a.sidedness, f"{a.risk:g}", _fmt(a.estimate), _fmt(a.std_dev),
         _fmt(a.quantile), _fmt(a.upper_bound), str(a.c_max))
        for a in doc.answers
    ]
    lines += _aligned(
        ("method", "sidedness", "risk", "estimate", "std_dev", "quantile",
         "upper_bound", "c_max"),
        answer_rows)
    prov = doc.provenance
    lines += [
        "",
        f"Provenance: seed={prov.seed} replicates={prov.replicates} "
        f"version={prov.version}",
    ]
    return "\n".join(lines) + "\n"


def _render_json(doc: ReportDocument) -> str:
    payload = {
        "schema": SCHEMA_NAME,
        "schema_version": SCHEMA_VERSION,
        "sample": {
            "entries": [[label, count] for label, count in doc.sample.entries],
            "size": doc.sample.size,
            "richness": doc.sample.richness,
        },
        "estimates": [
            {
                "method": e.method,
                "estimate": e.estimate,
                "variance": e.variance,
                "params": [[key, value] for key, value in e.params],
            }
            for e in doc.estimates
        ],
        "answers": [
            {
                "method": a.method,
                "estimate": a.estimate,
                "std_dev": a.std_dev,
                "quantile": a.quantile,
                "upper_bound": a.upper_bound,
                "c_max": a.c_max,
                "risk": a.risk,
                "sidedness": a.sidedness,
            }
            for a in doc.answers
        ],
        "provenance": {
            "seed": doc.provenance.seed,
            "replicates": doc.provenance.replicates,
            "version": doc.provenance.version,
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def _render_csv(doc: ReportDocument) -> str:
    buffer = _io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["row", "method", "sidedness", "risk", "estimate", "variance",
                     "std_dev", "quantile", "upper_bound", "c_max", "params"])
    for e in doc.estimates:
        writer.writerow(["estimate", e.method, "", "", repr(e.estimate),
                         repr(e.variance), repr(e.std_dev), "", "", "",
                         _params_text(e.params)])
    for a in doc.answers:
        writer.writerow(["answer", a.method, a.sidedness, repr(a.risk),
                         repr(a.estimate), "", repr(a.std_dev), repr(a.quantile),
                         repr(a.upper_bound), a.c_max, ""])
    return buffer.getvalue()


def render_report(doc: ReportDocument, fmt: str = "table") -> str:
    """Render a report as ``table``, ``json`` or ``csv`` text."""
    if fmt == "table":
        return _render_table(doc)
    if fmt == "json":
        return _render_json(doc)
    if fmt == "csv":
        return _render_csv(doc)
    raise InvalidInputError(f"format must be 'table', 'json' or 'csv', got {fmt!r}")


def report_from_json(text: str) -> ReportDocument:
    """Rebuild a ReportDocument from its JSON rendering, losslessly."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, f"invalid JSON: {exc.msg}") from exc
    if payload.get("schema") != SCHEMA_NAME:
        raise InvalidInputError(f"not a {SCHEMA_NAME} document")
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise InvalidInputError(
            f"unsupported schema_version {payload.get('schema_version')!r}")
    sample = validate((label, count) for label, count in payload["sample"]["entries"])
    estimates = tuple(
        RichnessEstimate(
            method=row["method"],
            estimate=row["estimate"],
            variance=row["variance"],
            params=tuple((key, value) for key, value in row["params"]),
        )
        for row in payload["estimates"]
    )
    answers = tuple(
        ConfidenceAnswer(
            method=row["method"],
            estimate=row["estimate"],
            std_dev=row["std_dev"],
            quantile=row["quantile"],
            upper_bound=row["upper_bound"],
            c_max=row["c_max"],
            risk=row["risk"],
            sidedness=row["sidedness"],
        )
        for row in payload["answers"]
    )
    prov = payload["provenance"]
    return ReportDocument(
        sample=sample,
        estimates=estimates,
        answers=answers,
        provenance=Provenance(seed=prov["seed"], replicates=prov["replicates"],
                              version=prov["version"]),
    )


def bundled_data_path(name: str):
    """Filesystem path of a data file shipped with the package."""
    return resources.files("richness") / "data" / name


def load_bundled_sample() -> AbundanceSample:
    """The worked flower-count example bundled with the package."""
    text = bundled_data_path("flowers.csv").read_text(encoding="utf-8")
    return parse_abundance(text, "csv")
