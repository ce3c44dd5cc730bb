"""Labeled square matrices and their JSON/CSV wire formats.

All matrix kinds share one JSON shape, ``{"labels": [...], "rows": [[...]]}``,
and one CSV shape with a label header row and column.  Relation matrices
serialize booleans as 0/1; category-distance matrices serialize absent
entries as JSON null and empty CSV cells.
"""

from __future__ import annotations

import csv
import io
from typing import Sequence

from .errors import NonSquare, UnknownLabel


class LabeledMatrix:
    """Immutable square matrix with one label per row/column."""

    __slots__ = ("labels", "entries", "_index")

    def __init__(self, labels: Sequence[str], entries: Sequence[Sequence]):
        labels = tuple(labels)
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != len(labels) or any(len(row) != len(labels) for row in rows):
            raise NonSquare(
                f"matrix with {len(labels)} labels must be {len(labels)}x{len(labels)}"
            )
        for row in rows:
            for value in row:
                self._check_entry(value)
        self.labels = labels
        self.entries = rows
        self._index = {label: i for i, label in enumerate(labels)}
        if len(self._index) != len(labels):
            raise ValueError("matrix labels must be unique")

    def _check_entry(self, value) -> None:
        raise NotImplementedError

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"label {label!r} not in matrix") from None

    def entry(self, x: str, y: str):
        return self.entries[self.index(x)][self.index(y)]

    def __eq__(self, other: object) -> bool:
        return (
            type(other) is type(self)
            and self.labels == other.labels
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.labels, self.entries))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(labels={self.labels!r}, entries={self.entries!r})"

    # -- serialization ----------------------------------------------------

    @staticmethod
    def _cell_to_json(value):
        return value

    @classmethod
    def _cell_from_json(cls, value):
        return value

    def to_json_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "rows": [[self._cell_to_json(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict):
        labels = data["labels"]
        rows = [[cls._cell_from_json(v) for v in row] for row in data["rows"]]
        return cls(labels, rows)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["", *self.labels])
        for label, row in zip(self.labels, self.entries):
            writer.writerow([label, *[self._cell_to_csv(v) for v in row]])
        return buffer.getvalue()

    @staticmethod
    def _cell_to_csv(value):
        return value


class DistanceMatrix(LabeledMatrix):
    """Integer distances; symmetry and axioms are checked, not enforced."""

    def _check_entry(self, value) -> None:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"distance entries must be integers, got {value!r}")


class RelationMatrix(LabeledMatrix):
    """Boolean relation over labeled nodes; serialized as 0/1."""

    def __init__(self, labels: Sequence[str], entries: Sequence[Sequence]):
        coerced = [[bool(v) for v in row] for row in entries]
        super().__init__(labels, coerced)

    def _check_entry(self, value) -> None:
        if not isinstance(value, bool):
            raise ValueError(f"relation entries must be booleans, got {value!r}")

    @staticmethod
    def _cell_to_json(value):
        return int(value)

    @classmethod
    def _cell_from_json(cls, value):
        return bool(value)

    @staticmethod
    def _cell_to_csv(value):
        return int(value)


class SignMatrix(LabeledMatrix):
    """Square matrix over {+1, -1}."""

    def _check_entry(self, value) -> None:
        if value not in (1, -1) or isinstance(value, bool):
            raise ValueError(f"sign entries must be +1 or -1, got {value!r}")


class CategoryDistanceMatrix(LabeledMatrix):
    """Minimum distances per category pair; absent entries are None."""

    def _check_entry(self, value) -> None:
        if value is None:
            return
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"entries must be integers or None, got {value!r}")
        if value < 1:
            raise ValueError(f"present entries must be at least 1, got {value!r}")

    @property
    def categories(self) -> tuple[str, ...]:
        return self.labels

    def get(self, x: str, y: str) -> int | None:
        return self.entry(x, y)

    @staticmethod
    def _cell_to_csv(value):
        return "" if value is None else value
