import csv
import json

import pytest

from richness import (
    build_report,
    load_bundled_sample,
    parse_abundance,
    render_report,
    report_from_json,
)
from richness.errors import (
    DuplicateLabelError,
    InvalidInputError,
    NonPositiveCountError,
    ParseError,
)

FLOWERS_CSV = "color,count\npurple,14\nred,10\nyellow,10\norange,9\nwhite,1"


def test_parse_flowers_csv(flower_sample):
    assert parse_abundance(FLOWERS_CSV) == flower_sample


def test_bundled_sample_is_the_flower_example(flower_sample):
    assert load_bundled_sample() == flower_sample


def test_parse_without_header():
    sample = parse_abundance("a,1")
    assert sample.entries == (("a", 1),)


def test_parse_tsv():
    sample = parse_abundance("label\tcount\nx\t3\ny\t4", fmt="tsv")
    assert sample.entries == (("x", 3), ("y", 4))


def test_parse_is_whitespace_tolerant():
    sample = parse_abundance(" purple , 14 \n red , 10 ")
    assert sample.entries == (("purple", 14), ("red", 10))


def test_parse_skips_blank_lines_and_crlf():
    sample = parse_abundance("color,count\r\n\r\npurple,14\r\nred,10\r\n")
    assert sample.entries == (("purple", 14), ("red", 10))


def test_parse_negative_count_reaches_validation():
    with pytest.raises(NonPositiveCountError):
        parse_abundance("a,-3")


def test_parse_duplicate_label():
    with pytest.raises(DuplicateLabelError):
        parse_abundance("a,1\na,2")


@pytest.mark.parametrize("text,line", [
    ("", 0),
    ("color,count\n", 0),
    ("a,1,9", 1),
    ("color,count\nb,x", 2),
    ("a,1\nb", 2),
    ("color,count\n,3", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_abundance(text)
    assert excinfo.value.line == line


def test_parse_rejects_unknown_format():
    with pytest.raises(InvalidInputError):
        parse_abundance("a,1", fmt="psv")


@pytest.fixture
def report(flower_sample):
    return build_report(flower_sample)


def test_table_rendering_matches_worked_example(report):
    text = render_report(report, "table")
    assert "44 individuals in 5 categories" in text
    fisher_row = next(line for line in text.splitlines()
                      if line.startswith("fisher") and "5.0000" in line)
    assert "1.0064" in fisher_row
    answer_rows = [line for line in text.splitlines() if "two_sided" in line]
    assert any("6.9662" in line and line.rstrip().endswith("7")
               for line in answer_rows)
    assert "7.8927" in text and "7.2484" in text and "6.9498" in text
    assert "seed=42" in text and "replicates=200" in text


def test_table_uses_four_decimals_everywhere(report):
    text = render_report(report, "table")
    assert "1.9600" in text          # quantile
    assert "e-" not in text and "e+" not in text


def test_json_round_trip_is_lossless(report):
    rendered = render_report(report, "json")
    assert report_from_json(rendered) == report


def test_json_schema_fields(report):
    payload = json.loads(render_report(report, "json"))
    assert payload["schema"] == "richness-report"
    assert payload["schema_version"] == 1
    assert payload["sample"]["size"] == 44
    assert payload["sample"]["richness"] == 5
    assert len(payload["estimates"]) == 5
    # bootstrap contributes a one-sided row beside the two-sided one
    assert len(payload["answers"]) == 6
    assert payload["provenance"]["replicates"] == 200


def test_csv_rendering_is_flat_and_parsable(report):
    rows = list(csv.reader(render_report(report, "csv").splitlines()))
    header, body = rows[0], rows[1:]
    assert header[0] == "row"
    assert len(body) == len(report.estimates) + len(report.answers)
    estimate_rows = [r for r in body if r[0] == "estimate"]
    fisher = next(r for r in estimate_rows if r[1] == "fisher")
    assert float(fisher[header.index("estimate")]) == 5.0
    answer_rows = [r for r in body if r[0] == "answer"]
    assert {r[header.index("c_max")] for r in answer_rows} == {"6", "7", "8"}


def test_empty_method_list_yields_header_only_report(flower_sample):
    doc = build_report(flower_sample, methods=())
    assert doc.estimates == () and doc.answers == ()
    text = render_report(doc, "table")
    assert "method" in text
    assert report_from_json(render_report(doc, "json")) == doc


def test_render_rejects_unknown_format(report):
    with pytest.raises(InvalidInputError):
        render_report(report, "xml")


def test_report_from_json_rejects_foreign_documents(report):
    with pytest.raises(ParseError):
        report_from_json("{not json")
    with pytest.raises(InvalidInputError):
        report_from_json(json.dumps({"schema": "other", "schema_version": 1}))
    payload = json.loads(render_report(report, "json"))
    payload["schema_version"] = 99
    with pytest.raises(InvalidInputError):
        report_from_json(json.dumps(payload))
