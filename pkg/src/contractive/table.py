"""Rectangular numeric result tables with bit-exact round-trip serialization.

Rows are float64; a NaN entry represents an intentionally omitted cell (for
example the relative variance at eta = 0, where it has a pole).  CSV output
writes floats with 17 significant digits, which round-trips float64 exactly;
omitted cells are written as empty fields.  The JSON form carries the same
schema with nulls for omitted cells.  Metadata travels as '# key: value'
comment lines in CSV and as an object in JSON.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

_MAGIC = "contractive-table"
_VERSION = 1


def format_float(v: float) -> str:
    if math.isnan(v):
        return ""
    return f"{v:.17g}"


@dataclass
class ScanTable:
    columns: list[str]
    rows: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if rows.ndim != 2 or rows.shape[1] != len(self.columns):
            raise ConfigError(
                f"rows shape {rows.shape} does not match {len(self.columns)} columns"
            )
        bad = ~(np.isfinite(rows) | np.isnan(rows))
        if bad.any():
            raise ConfigError("table rows may not contain infinities")
        self.rows = rows

    def column(self, name: str) -> np.ndarray:
        try:
            idx = self.columns.index(name)
        except ValueError:
            raise ConfigError(f"no column named {name!r}") from None
        return self.rows[:, idx]

    # ---------- CSV ----------

    def to_csv(self) -> str:
        lines = [f"# {_MAGIC} v{_VERSION}"]
        for key in sorted(self.metadata):
            lines.append(f"# {key}: {self.metadata[key]}")
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(format_float(v) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "ScanTable":
        meta: dict = {}
        header: list[str] | None = None
        data: list[list[float]] = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith(_MAGIC):
                    continue
                if ":" in body:
                    key, val = body.split(":", 1)
                    meta[key.strip()] = val.strip()
                continue
            if header is None:
                header = line.split(",")
                continue
            data.append([float(tok) if tok else math.nan for tok in line.split(",")])
        if header is None:
            raise ConfigError("CSV table has no header row")
        rows = np.array(data, dtype=float) if data else np.empty((0, len(header)))
        return cls(columns=header, rows=rows, metadata=meta)

    # ---------- JSON ----------

    def to_json(self) -> str:
        payload = {
            "format": _MAGIC,
            "version": _VERSION,
            "metadata": self.metadata,
            "columns": self.columns,
            "rows": [
                [None if math.isnan(v) else v for v in row] for row in self.rows
            ],
        }
        return json.dumps(payload, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ScanTable":
        payload = json.loads(text)
        if payload.get("format") != _MAGIC:
            raise ConfigError("not a contractive table JSON document")
        rows = [
            [math.nan if v is None else float(v) for v in row]
            for row in payload["rows"]
        ]
        arr = (
            np.array(rows, dtype=float)
            if rows
            else np.empty((0, len(payload["columns"])))
        )
        return cls(columns=list(payload["columns"]), rows=arr, metadata=payload.get("metadata", {}))

    # ---------- files ----------

    def write(self, path: str, fmt: str) -> None:
        if fmt == "csv":
            text = self.to_csv()
        elif fmt == "json":
            text = self.to_json()
        else:
            raise ConfigError(f"unknown output format {fmt!r}")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)

    @classmethod
    def read(cls, path: str) -> "ScanTable":
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            return cls.from_json(text)
        return cls.from_csv(text)
