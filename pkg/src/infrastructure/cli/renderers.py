"""Output formatting for reports."""
import csv
import io
from enum import Enum

from ...core.exceptions import UsageError
from .schemas import Report


class OutputFormat(str, Enum):
    PLAIN = "plain"
    JSON = "json"
    CSV = "csv"


def render(report: Report, output_format: str) -> str:
    """Render a report; the result always ends with a newline."""
    try:
        fmt = OutputFormat(output_format)
    except ValueError:
        raise UsageError(f"Unknown output format {output_format!r}")

    if fmt is OutputFormat.JSON:
        return report.model_dump_json(indent=2, by_alias=True) + "\n"
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(report.csv_rows())
        return buffer.getvalue()
    return report.render_plain() + "\n"
