import json
import sys
from typing import Any, Dict, Optional, TextIO

import pandas as pd

from models.reports import Report, ReportRow


def rows_frame(report: Report) -> pd.DataFrame:
    """
    The report rows as a DataFrame with the fixed CSV columns; object dtype keeps integers and blanks intact
    """
    return pd.DataFrame([row.as_record() for row in report.rows], columns=ReportRow.COLUMNS, dtype=object)


def as_json(report: Report) -> Dict[str, Any]:
    """
    {command, params, rows, pass}, plus complete, notes, word and details when they carry anything
    """
    document = {
        "command": report.command,
        "params": report.params,
        "rows": [row.as_record() for row in report.rows],
        "pass": report.passed,
    }
    if not report.complete:
        document["complete"] = False
    if report.notes:
        document["notes"] = report.notes
    if report.payload is not None:
        document["word"] = report.payload
    if report.details:
        document["details"] = report.details
    return document


def emit_text(report: Report, stream: TextIO) -> None:
    if report.command == "gen":
        stream.write(f"{report.payload}\n")
        stream.write(json.dumps(report.details, sort_keys=True) + "\n")
        return
    frame = rows_frame(report)
    if not frame.empty:
        frame["detail"] = [row.detail.replace("\n", " | ") for row in report.rows]
        stream.write(frame.fillna("").to_string(index=False) + "\n")
    for note in report.notes:
        stream.write(f"note: {note}\n")
    if not report.complete:
        stream.write("INCOMPLETE: some checks exceeded their budget\n")
    stream.write(f"{'PASS' if report.passed else 'FAIL'}\n")


def emit_csv(report: Report, stream: TextIO) -> None:
    stream.write(rows_frame(report).to_csv(index=False, lineterminator="\n"))


def emit(report: Report, fmt: str = "text", stream: Optional[TextIO] = None) -> None:
    """
    Write a report in one of the three output formats
    :param report: the finished report
    :param fmt: text, json or csv
    :param stream: where to write, sys.stdout at call time by default
    """
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(as_json(report), sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        emit_csv(report, stream)
    else:
        emit_text(report, stream)
