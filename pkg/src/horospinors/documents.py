"""
Input and report documents of the command-line interface.

Input is UTF-8 JSON of the form

    {"spinors": [[re_xi, im_xi, re_eta, im_eta], ...], "labels": [...], "tol": 1e-9}

or repeated inline `--spinor re,im,re,im` values. Reports are JSON with complex
numbers written as [re, im] pairs; the lambda matrix also has a CSV form.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any

from horospinors.errors import ParseError
from horospinors.spinor_flags import Spinor


def encode_complex(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def decode_complex(value: Any) -> complex:
    if not isinstance(value, list) or len(value) != 2:
        raise ParseError(f"expected a [re, im] pair, got {value!r}")
    return complex(_number(value[0]), _number(value[1]))


def encode_spinor(k: Spinor) -> list[float]:
    return encode_complex(k.xi) + encode_complex(k.eta)


def _number(value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise ParseError(f"expected a number, got {value!r}")
    try:
        number = float(value)
    except (OverflowError, ValueError) as e:
        raise ParseError(f"number out of range: {e}") from e
    if not math.isfinite(number):
        raise ParseError(f"expected a finite number, got {value!r}")
    return number


def _spinor_from_quadruple(values: Any, index: int) -> Spinor:
    if not isinstance(values, list) or len(values) != 4:
        raise ParseError(f"spinor {index}: expected [re_xi, im_xi, re_eta, im_eta], got {values!r}")
    try:
        re_xi, im_xi, re_eta, im_eta = (_number(v) for v in values)
    except ParseError as e:
        raise ParseError(f"spinor {index}: {e}") from e
    return Spinor(complex(re_xi, im_xi), complex(re_eta, im_eta))


@dataclass
class InputDocument:
    """Spinors to process, with optional labels and tolerance override"""

    spinors: list[Spinor]
    labels: list[str] | None = None
    tol: float | None = None

    def __post_init__(self):
        if not self.spinors:
            raise ParseError("input needs at least one spinor")
        if self.labels is not None and len(self.labels) != len(self.spinors):
            raise ParseError(f"{len(self.labels)} labels given for {len(self.spinors)} spinors")
        if self.tol is not None and not self.tol > 0:
            raise ParseError(f"tolerance must be positive, got {self.tol}")

    @classmethod
    def from_json(cls, text: str) -> InputDocument:
        """
        Parse the JSON input format.

        Raises:
            ParseError: If the text is not a valid input document
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from e
        if not isinstance(data, dict):
            raise ParseError("input document must be a JSON object")
        if "spinors" not in data:
            raise ParseError("input document has no 'spinors' field")
        if not isinstance(data["spinors"], list):
            raise ParseError("'spinors' must be a list")

        spinors = [_spinor_from_quadruple(v, i) for i, v in enumerate(data["spinors"])]

        labels = data.get("labels")
        if labels is not None:
            if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
                raise ParseError("'labels' must be a list of strings")

        tol = data.get("tol")
        if tol is not None:
            tol = _number(tol)

        return cls(spinors, labels, tol)

    @classmethod
    def from_inline(cls, values: list[str]) -> InputDocument:
        """
        Parse repeated `re,im,re,im` command-line values.

        Raises:
            ParseError: If a value is not four comma-separated numbers
        """
        spinors = []
        for index, raw in enumerate(values):
            parts = raw.split(",")
            try:
                numbers = [float(p) for p in parts]
            except ValueError as e:
                raise ParseError(f"spinor {index}: cannot parse {raw!r}") from e
            spinors.append(_spinor_from_quadruple(numbers, index))
        return cls(spinors)


@dataclass
class ReportDocument:
    """
    Output of a report command.

    lambda_matrix holds complex entries and is antisymmetric with zero diagonal.
    sections hold JSON-native data keyed by name.
    """

    command: str
    lambda_matrix: list[list[complex]] | None = None
    labels: list[str] | None = None
    sections: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"command": self.command}
        if self.labels is not None:
            data["labels"] = list(self.labels)
        if self.lambda_matrix is not None:
            data["lambda_matrix"] = [[encode_complex(z) for z in row] for row in self.lambda_matrix]
        data.update(self.sections)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        """
        Parse a report written by to_json.

        Raises:
            ParseError: If the text is not a report
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from e
        if not isinstance(data, dict) or "command" not in data:
            raise ParseError("report must be a JSON object with a 'command' field")

        command = data.pop("command")
        labels = data.pop("labels", None)
        matrix = data.pop("lambda_matrix", None)
        if matrix is not None:
            matrix = [[decode_complex(z) for z in row] for row in matrix]
        return cls(command, matrix, labels, data)

    def to_csv(self) -> str:
        """
        CSV rendering: the lambda matrix in long form (i, j, re, im) when present,
        otherwise the first section that is a list of flat records.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if self.lambda_matrix is not None:
            writer.writerow(["i", "j", "label_i", "label_j", "re", "im"])
            for i, row in enumerate(self.lambda_matrix):
                for j, z in enumerate(row):
                    writer.writerow(
                        [i, j, self._label(i), self._label(j), repr(z.real), repr(z.imag)]
                    )
            return buffer.getvalue()

        for section in self.sections.values():
            if isinstance(section, list) and section and isinstance(section[0], dict):
                columns = list(section[0])
                writer.writerow(columns)
                for record in section:
                    writer.writerow([_csv_cell(record[c]) for c in columns])
                return buffer.getvalue()
        raise ParseError(f"report '{self.command}' has no tabular section for CSV")

    def _label(self, index: int) -> str:
        if self.labels is not None:
            return self.labels[index]
        return str(index)


def _csv_cell(value: Any) -> str:
    if isinstance(value, list):
        return " ".join(repr(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)
