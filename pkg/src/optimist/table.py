"""The knowledge table: one row per graph, one column per invariant.

Values are computed exactly once at insertion and stored as exact rationals
(``Fraction``) or booleans.  Rows are append-only; ``append_graph`` returns a
new table and leaves the original untouched, so readers can keep a snapshot
while the agent grows its knowledge.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .graphs import Graph, encode_graph6, parse_graph6
from .invariants import InvariantRegistry

__all__ = ["KnowledgeTable", "UnknownColumnError", "TableFormatError"]

SCHEMA_VERSION = 1

Row = tuple[str, dict]


class UnknownColumnError(KeyError):
    """Raised when an operation names a column the table does not have."""


class TableFormatError(ValueError):
    """Raised when a persisted table cannot be read back."""


@dataclass(frozen=True)
class KnowledgeTable:
    numeric_columns: tuple[str, ...]
    boolean_columns: tuple[str, ...]
    rows: tuple[Row, ...]
    graphs: dict[str, Graph]

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def build(cls, graphs: list[Graph], registry: InvariantRegistry) -> "KnowledgeTable":
        """Compute every registry column for every graph.

        Graph names are assigned ``G0``, ``G1``, ... in input order.
        """
        numeric = tuple(registry.numeric_names())
        boolean = tuple(registry.boolean_names())
        rows: list[Row] = []
        store: dict[str, Graph] = {}
        for index, graph in enumerate(graphs):
            name = f"G{index}"
            rows.append((name, _compute_row(graph, name, registry)))
            store[name] = graph
        return cls(numeric, boolean, tuple(rows), store)

    def append_graph(self, graph: Graph, registry: InvariantRegistry) -> "KnowledgeTable":
        """Return a new table with one extra row for ``graph``.

        The new row is named next in the ``G<k>`` sequence.  On any invariant
        failure the original table is unchanged (nothing is mutated here).
        """
        name = f"G{len(self.rows)}"
        row = _compute_row(graph, name, registry)
        store = dict(self.graphs)
        store[name] = graph
        return KnowledgeTable(
            self.numeric_columns, self.boolean_columns, self.rows + ((name, row),), store
        )

    # ------------------------------------------------------------------
    # access
    # ------------------------------------------------------------------

    @property
    def columns(self) -> tuple[str, ...]:
        return self.numeric_columns + self.boolean_columns

    def graph_names(self) -> list[str]:
        return [name for name, _ in self.rows]

    def is_numeric(self, column: str) -> bool:
        return column in self.numeric_columns

    def is_boolean(self, column: str) -> bool:
        return column in self.boolean_columns

    def _require_column(self, column: str) -> None:
        if column not in self.numeric_columns and column not in self.boolean_columns:
            raise UnknownColumnError(column)

    def value(self, name: str, column: str):
        self._require_column(column)
        for row_name, values in self.rows:
            if row_name == name:
                return values[column]
        raise KeyError(f"no row named {name!r}")

    def filter_by_property(self, property_name: str) -> tuple[list[Row], list[str]]:
        """Rows where a boolean column is true, in table order, plus their names."""
        self._require_column(property_name)
        if property_name not in self.boolean_columns:
            raise UnknownColumnError(property_name)
        selected = [(name, values) for name, values in self.rows if values[property_name]]
        return selected, [name for name, _ in selected]

    # ------------------------------------------------------------------
    # persistence: CSV body plus a JSON sidecar with graphs and schema
    # ------------------------------------------------------------------

    def to_csv_text(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("name",) + self.columns)
        for name, values in self.rows:
            record = [name]
            record.extend(str(values[col]) for col in self.numeric_columns)
            record.extend(str(values[col]) for col in self.boolean_columns)
            writer.writerow(record)
        return buffer.getvalue()

    def sidecar_dict(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "numeric_columns": list(self.numeric_columns),
            "boolean_columns": list(self.boolean_columns),
            "graphs": {name: encode_graph6(g) for name, g in self.graphs.items()},
        }

    @classmethod
    def from_csv_text(cls, csv_text: str, sidecar: dict) -> "KnowledgeTable":
        version = sidecar.get("version")
        if version != SCHEMA_VERSION:
            raise TableFormatError(f"unsupported table schema version {version!r}")
        numeric = tuple(sidecar["numeric_columns"])
        boolean = tuple(sidecar["boolean_columns"])
        reader = csv.reader(io.StringIO(csv_text))
        try:
            header = next(reader)
        except StopIteration:
            raise TableFormatError("table CSV is empty") from None
        expected = ["name", *numeric, *boolean]
        for column in expected:
            if column not in header:
                raise TableFormatError(f"table CSV is missing column {column!r}")
        if header != expected:
            raise TableFormatError("table CSV columns do not match the declared schema")
        rows: list[Row] = []
        store: dict[str, Graph] = {}
        for record in reader:
            if len(record) != len(expected):
                raise TableFormatError(f"row {record!r} has {len(record)} cells, expected {len(expected)}")
            name = record[0]
            values: dict = {}
            for column, cell in zip(numeric, record[1:1 + len(numeric)]):
                try:
                    values[column] = Fraction(cell)
                except ValueError as exc:
                    raise TableFormatError(f"bad numeric cell {cell!r} in column {column!r}") from exc
            for column, cell in zip(boolean, record[1 + len(numeric):]):
                if cell not in ("True", "False"):
                    raise TableFormatError(f"bad boolean cell {cell!r} in column {column!r}")
                values[column] = cell == "True"
            rows.append((name, values))
            try:
                store[name] = parse_graph6(sidecar["graphs"][name])
            except KeyError:
                raise TableFormatError(f"sidecar is missing the graph for row {name!r}") from None
        return cls(numeric, boolean, tuple(rows), store)

    def save(self, directory: str | Path) -> None:
        """Write ``knowledge.csv`` and ``graphs.json`` under ``directory``."""
        path = Path(directory)
        path.mkdir(parents=True, exist_ok=True)
        (path / "knowledge.csv").write_text(self.to_csv_text(), encoding="utf-8")
        (path / "graphs.json").write_text(
            json.dumps(self.sidecar_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )

    @classmethod
    def load(cls, directory: str | Path) -> "KnowledgeTable":
        path = Path(directory)
        csv_path = path / "knowledge.csv"
        sidecar_path = path / "graphs.json"
        if not csv_path.exists() or not sidecar_path.exists():
            raise TableFormatError(f"{path} does not contain a saved knowledge table")
        csv_text = csv_path.read_text(encoding="utf-8")
        if not csv_text.strip():
            raise TableFormatError("table CSV is empty")
        try:
            sidecar = json.loads(sidecar_path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise TableFormatError(f"graphs.json is not valid JSON: {exc}") from exc
        return cls.from_csv_text(csv_text, sidecar)


def _compute_row(graph: Graph, name: str, registry: InvariantRegistry) -> dict:
    values: dict = {}
    try:
        for column, fn in registry.numeric.items():
            values[column] = Fraction(fn(graph))
        for column, fn in registry.boolean.items():
            values[column] = bool(fn(graph))
    except Exception as exc:
        raise type(exc)(f"computing invariants for {name}: {exc}") from exc
    return values
