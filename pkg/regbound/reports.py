# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Output records of the command-line front end.

JSON output is sorted and indented so identical inputs give byte-identical
reports. Exact cells carry ``value``; uncertain cells carry
``interval: {lo, hi}`` with ``hi`` null when unbounded.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from regbound import __version__
from regbound.errors import DomainError
from regbound.tables import Interval

FORMATS = ("table", "json", "csv")


def cell_json(i: int, k: int, value: Interval) -> Dict:
    if value.is_exact:
        return {"i": i, "k": k, "value": value.lo}
    return {"i": i, "k": k, "interval": {"lo": value.lo, "hi": value.hi}}


@dataclass
class OutputRecord:
    command: str
    inputs: Dict
    results: Dict
    axioms: List[Dict] = field(default_factory=list)
    version: str = __version__

    def to_json(self) -> Dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "axioms": self.axioms,
            "version": self.version,
        }


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record.to_json(), sort_keys=True, indent=2)
    if fmt == "csv":
        return _render_csv(record)
    if fmt == "table":
        return _render_table(record)
    raise DomainError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _cell_bounds(cell: Dict) -> Tuple[int, object]:
    if "value" in cell:
        return cell["value"], cell["value"]
    return cell["interval"]["lo"], cell["interval"]["hi"]


def _render_csv(record: OutputRecord) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    cells = record.results.get("cells")
    if cells is not None:
        writer.writerow(["i", "k", "lo", "hi"])
        for cell in cells:
            lo, hi = _cell_bounds(cell)
            writer.writerow([cell["i"], cell["k"], lo, "" if hi is None else hi])
    else:
        writer.writerow(["key", "value"])
        for key in sorted(record.results):
            writer.writerow([key, json.dumps(record.results[key], sort_keys=True)])
    return buffer.getvalue().rstrip("\n")


def _render_cell(cell: Dict) -> str:
    lo, hi = _cell_bounds(cell)
    if "value" in cell:
        return str(lo)
    return f"{lo}..{'' if hi is None else hi}"


def render_grid(cells: Sequence[Dict]) -> str:
    """Rows h^i, columns k."""
    ks = sorted({c["k"] for c in cells})
    rows = sorted({c["i"] for c in cells})
    lookup = {(c["i"], c["k"]): _render_cell(c) for c in cells}
    width = max([len(str(k)) for k in ks] + [len(v) for v in lookup.values()] + [1])
    lines = ["k".rjust(5) + " " + " ".join(str(k).rjust(width) for k in ks)]
    for i in rows:
        entries = [lookup.get((i, k), "").rjust(width) for k in ks]
        lines.append(f"h^{i}".rjust(5) + " " + " ".join(entries))
    return "\n".join(lines)


def _render_value(value) -> str:
    if isinstance(value, dict):
        return ", ".join(f"{k}={_render_value(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "[" + ", ".join(_render_value(v) for v in value) + "]"
    return "-" if value is None else str(value)


def _render_table(record: OutputRecord) -> str:
    lines = [f"{record.command} (regbound {record.version})"]
    for key in sorted(record.results):
        value = record.results[key]
        if key == "cells":
            continue
        if isinstance(value, str) and "\n" in value:
            lines.append(f"{key}:")
            lines.extend("  " + line for line in value.splitlines())
        else:
            lines.append(f"{key}: {_render_value(value)}")
    if "cells" in record.results:
        lines.append(render_grid(record.results["cells"]))
    if record.axioms:
        lines.append("axioms:")
        lines.extend(f"  - {a['name']}: {a['statement']}" for a in record.axioms)
    return "\n".join(lines)
