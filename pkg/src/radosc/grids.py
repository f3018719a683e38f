"""Labeled rectangular result grids with CSV/JSON export.

Used by the squeezing maps, the density-evolution grids and every CLI
subcommand.  Output is deterministic: metadata keys are sorted and floats
are written with 17 significant digits (CSV) or shortest round-trip repr
(JSON), so identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DomainError

__all__ = ["GridResult"]


def _fmt(v) -> str:
    return f"{v:.17g}" if isinstance(v, (int, float, np.floating, np.integer)) else str(v)


@dataclass
class GridResult:
    """Rectangular real-valued table with one labeled axis per dimension."""

    row_name: str
    row_values: Sequence
    col_name: str
    col_values: Sequence
    values: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (len(self.row_values), len(self.col_values)):
            raise DomainError(
                f"grid shape {self.values.shape} does not match axes "
                f"({len(self.row_values)} x {len(self.col_values)})"
            )
        self.metadata = {str(k): str(v) for k, v in self.metadata.items()}

    # -- CSV ----------------------------------------------------------------
    def csv_text(self) -> str:
        lines = [f"# {k}={self.metadata[k]}" for k in sorted(self.metadata)]
        if all(isinstance(c, str) for c in self.col_values):
            col_labels = list(self.col_values)
        else:
            col_labels = [f"{self.col_name}={_fmt(c)}" for c in self.col_values]
        lines.append(",".join([self.row_name] + col_labels))
        for label, row in zip(self.row_values, self.values):
            lines.append(",".join([_fmt(label)] + [_fmt(v) for v in row]))
        return "\n".join(lines) + "\n"

    # -- JSON ---------------------------------------------------------------
    def to_json_dict(self) -> dict:
        def axis_values(vals):
            return [v if isinstance(v, str) else float(v) for v in vals]

        return {
            "metadata": dict(sorted(self.metadata.items())),
            "row_axis": {"name": self.row_name, "values": axis_values(self.row_values)},
            "col_axis": {"name": self.col_name, "values": axis_values(self.col_values)},
            "values": [[float(v) for v in row] for row in self.values],
        }

    def json_text(self) -> str:
        return json.dumps(self.to_json_dict(), indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "GridResult":
        data = json.loads(text)
        return cls(
            row_name=data["row_axis"]["name"],
            row_values=data["row_axis"]["values"],
            col_name=data["col_axis"]["name"],
            col_values=data["col_axis"]["values"],
            values=np.asarray(data["values"], dtype=float),
            metadata=data["metadata"],
        )
