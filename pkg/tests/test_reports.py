"""Report envelopes and the three output renderers."""

from __future__ import annotations

import csv
import io
import json

import pytest

from hurwitzq.reports import FORMATS, SCHEMA_VERSION, ReportEnvelope, render


def sample(report_format: str, **kwargs) -> ReportEnvelope:
    payload = {
        "notes": ["context line"],
        "columns": ["name", "value"],
        "rows": [["alpha", "1"], ["beta", "-2/3"]],
    }
    return ReportEnvelope(
        command="sample", report_format=report_format, payload=payload, **kwargs
    )


class TestEnvelope:
    def test_formats(self):
        assert FORMATS == ("text", "csv", "json")

    def test_rejects_unknown_format(self):
        with pytest.raises(ValueError):
            sample("xml")


class TestTextRendering:
    def test_layout(self):
        text = render(sample("text"))
        assert text.splitlines() == [
            "context line",
            "name value",
            "alpha 1",
            "beta -2/3",
        ]

    def test_counts_line_appears_only_when_counted(self):
        assert "pass" not in render(sample("text"))
        counted = render(sample("text", pass_count=3, fail_count=1))
        assert counted.splitlines()[-1] == "pass 3 fail 1"

    def test_cells_join_with_single_spaces(self):
        text = render(sample("text"))
        assert "  " not in text


class TestCsvRendering:
    def test_parses_back(self):
        rendered = render(sample("csv"))
        rows = list(csv.reader(io.StringIO(rendered)))
        assert rows == [["name", "value"], ["alpha", "1"], ["beta", "-2/3"]]

    def test_no_trailing_newline(self):
        assert not render(sample("csv")).endswith("\n")


class TestJsonRendering:
    def test_structure(self):
        data = json.loads(render(sample("json", pass_count=2)))
        assert data["schema_version"] == SCHEMA_VERSION
        assert data["command"] == "sample"
        assert data["format"] == "json"
        assert data["pass_count"] == 2
        assert data["fail_count"] == 0
        assert data["payload"]["columns"] == ["name", "value"]
        assert data["payload"]["rows"] == [["alpha", "1"], ["beta", "-2/3"]]

    def test_schema_version_is_1(self):
        assert SCHEMA_VERSION == 1

    def test_key_order_is_stable(self):
        keys = list(json.loads(render(sample("json"))).keys())
        assert keys == [
            "schema_version",
            "command",
            "format",
            "pass_count",
            "fail_count",
            "payload",
        ]


class TestCrossFormatConsistency:
    def test_same_values_in_every_format(self):
        text_rows = [
            line.split(" ") for line in render(sample("text")).splitlines()[2:]
        ]
        csv_rows = list(csv.reader(io.StringIO(render(sample("csv")))))[1:]
        json_rows = json.loads(render(sample("json")))["payload"]["rows"]
        assert text_rows == csv_rows == json_rows
