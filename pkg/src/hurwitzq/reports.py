"""Report envelopes and their text/CSV/JSON renderings.

A report is a command name, a pass/fail tally, and a tabular payload
(``columns`` + ``rows`` of plain strings, with optional ``notes``
lines).  Renderings are fully deterministic: the same envelope always
produces the same bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

SCHEMA_VERSION = 1

FORMATS = ("text", "csv", "json")


@dataclass(frozen=True)
class ReportEnvelope:
    command: str
    report_format: str
    payload: dict
    pass_count: int = 0
    fail_count: int = 0

    def __post_init__(self) -> None:
        if self.report_format not in FORMATS:
            raise ValueError(f"unknown format {self.report_format!r}")


def render(envelope: ReportEnvelope) -> str:
    if envelope.report_format == "csv":
        return _render_csv(envelope)
    if envelope.report_format == "json":
        return _render_json(envelope)
    return _render_text(envelope)


def _render_text(envelope: ReportEnvelope) -> str:
    lines = list(envelope.payload.get("notes", []))
    columns = envelope.payload.get("columns")
    if columns:
        lines.append(" ".join(columns))
        for row in envelope.payload.get("rows", []):
            lines.append(" ".join(str(cell) for cell in row).rstrip())
    if envelope.pass_count or envelope.fail_count:
        lines.append(f"pass {envelope.pass_count} fail {envelope.fail_count}")
    return "\n".join(lines)


def _render_csv(envelope: ReportEnvelope) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(envelope.payload.get("columns", []))
    for row in envelope.payload.get("rows", []):
        writer.writerow([str(cell) for cell in row])
    return out.getvalue().rstrip("\n")


def _render_json(envelope: ReportEnvelope) -> str:
    document = {
        "schema_version": SCHEMA_VERSION,
        "command": envelope.command,
        "format": envelope.report_format,
        "pass_count": envelope.pass_count,
        "fail_count": envelope.fail_count,
        "payload": envelope.payload,
    }
    return json.dumps(document, indent=2)
