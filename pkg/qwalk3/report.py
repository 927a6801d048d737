"""
Tables the commands emit.

CSV is a header row, one line per row and a trailer of `# key=value` summary
lines. Floats are written with 17 significant digits so that reading the
file back gives the same numbers. JSON mode writes `{params, rows, summary}`.
"""
import csv
import io
import json
from typing import Any, Dict, List, Sequence

import numpy as np


def plain(value):
    """Turn numpy scalars, complex numbers and containers into JSON-ready values"""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) + 0.0
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real) + 0.0, float(value.imag) + 0.0]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [plain(v) for v in value]
    return value


def format_value(value) -> str:
    value = plain(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, (int, str)):
        return str(value)
    return json.dumps(value, separators=(",", ":"))


def parse_value(text: str):
    for kind in (int, float):
        try:
            return kind(text)
        except ValueError:
            pass
    if text in ("true", "false"):
        return text == "true"
    return text


class MeasureReport:
    """A table of rows with the run parameters and a summary"""

    def __init__(
        self,
        header: Sequence[str],
        rows: List[Sequence[Any]],
        summary: Dict[str, Any] = None,
        params: Dict[str, Any] = None,
    ):
        self.header = list(header)
        for row in rows:
            if len(row) != len(self.header):
                raise ValueError(
                    f"row {row} does not match header {self.header}"
                )
        self.rows = [list(row) for row in rows]
        self.summary = dict(summary or {})
        self.params = dict(params or {})

    def __len__(self):
        return len(self.rows)

    def column(self, name: str) -> list:
        i = self.header.index(name)
        return [row[i] for row in self.rows]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.header)
        for row in self.rows:
            writer.writerow([format_value(v) for v in row])
        for key, value in self.summary.items():
            buffer.write(f"# {key}={format_value(value)}\n")
        return buffer.getvalue()

    def to_json(self) -> str:
        doc = {
            "params": plain(self.params),
            "rows": [dict(zip(self.header, plain(row))) for row in self.rows],
            "summary": plain(self.summary),
        }
        return json.dumps(doc, indent=2) + "\n"

    def render(self, json_output: bool = False) -> str:
        return self.to_json() if json_output else self.to_csv()


def read_csv(text: str):
    """
    Parse CSV written by `MeasureReport.to_csv`.

    Returns
    -------
    (header, rows, summary)
        Rows hold ints, floats, booleans or strings; summary values are left
        as the text that was written.
    """
    lines = text.splitlines()
    body = [line for line in lines if not line.startswith("#")]
    summary = {}
    for line in lines:
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            summary[key] = value
    reader = csv.reader(body)
    header = next(reader)
    rows = [[parse_value(cell) for cell in row] for row in reader]
    return header, rows, summary
