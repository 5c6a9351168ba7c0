"""Reading batches of triples from CSV or JSON-lines sources."""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO

from .core import NeutrosophicTriple, OutOfRange, make_triple

FORMATS = ("csv", "jsonl")


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class RecordOutOfRange(ParseError):
    """A component outside [0, 1], tagged with where it came from."""

    def __init__(self, line: int, err: OutOfRange, record_id: str | None = None):
        self.component = err.component
        self.value = err.value
        self.record_id = record_id
        where = f" (id {record_id!r})" if record_id is not None else ""
        super().__init__(line, f"{err}{where}")


class DuplicateId(ParseError):
    def __init__(self, line: int, record_id: str, first_line: int):
        self.record_id = record_id
        super().__init__(line, f"duplicate id {record_id!r} (first seen on line {first_line})")


@dataclass(frozen=True)
class Record:
    id: str | None
    triple: NeutrosophicTriple
    line: int


@dataclass(frozen=True)
class RecordBatch:
    records: tuple[Record, ...]
    source: str

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def guess_format(path: str | None) -> str:
    if path and Path(path).suffix.lower() in (".jsonl", ".ndjson"):
        return "jsonl"
    return "csv"


def _number(text: str, line: int, column: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ParseError(line, f"column {column}: {text!r} is not a number") from None


def _triple(values, line, record_id):
    try:
        return make_triple(*values)
    except OutOfRange as err:
        raise RecordOutOfRange(line, err, record_id) from None


def _read_csv(stream: IO[str]):
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None:
        raise ParseError(1, "empty input, expected a header with columns T,I,F")
    names = [h.strip().lstrip("\ufeff") for h in header]
    lowered = [n.lower() for n in names]
    if sorted(lowered) not in (["f", "i", "t"], ["f", "i", "id", "t"]) or len(set(lowered)) != len(lowered):
        raise ParseError(reader.line_num, f"header must hold T,I,F and an optional id column, got {','.join(names)}")
    cols = {n: k for k, n in enumerate(lowered)}
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        line = reader.line_num
        if len(row) != len(names):
            raise ParseError(line, f"expected {len(names)} fields, got {len(row)}")
        record_id = (row[cols["id"]].strip() or None) if "id" in cols else None
        values = [_number(row[cols[c]].strip(), line, c.upper()) for c in ("t", "i", "f")]
        yield record_id, values, line


def _read_jsonl(stream: IO[str]):
    for line, text in enumerate(stream, start=1):
        if not text.strip():
            continue
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as err:
            raise ParseError(line, f"invalid JSON: {err.msg}") from None
        if not isinstance(obj, dict):
            raise ParseError(line, "expected a JSON object")
        missing = [k for k in ("t", "i", "f") if k not in obj]
        if missing:
            raise ParseError(line, f"missing key(s) {', '.join(missing)}")
        values = []
        for key in ("t", "i", "f"):
            v = obj[key]
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ParseError(line, f"key {key!r}: {v!r} is not a number")
            values.append(float(v))
        record_id = obj.get("id")
        if record_id is not None:
            if isinstance(record_id, bool) or not isinstance(record_id, (str, int)):
                raise ParseError(line, f"id must be a string or integer, got {record_id!r}")
            record_id = str(record_id)
        yield record_id, values, line


def read_records(stream: IO[str], fmt: str = "csv", source: str = "<stream>") -> RecordBatch:
    if fmt not in FORMATS:
        raise ValueError(f"unknown input format {fmt!r}")
    rows = _read_csv(stream) if fmt == "csv" else _read_jsonl(stream)
    records = []
    seen: dict[str, int] = {}
    for record_id, values, line in rows:
        if record_id is not None:
            if record_id in seen:
                raise DuplicateId(line, record_id, seen[record_id])
            seen[record_id] = line
        records.append(Record(record_id, _triple(values, line, record_id), line))
    return RecordBatch(tuple(records), source)


def parse_input(source: str | Path | IO[str], fmt: str | None = None) -> RecordBatch:
    """Read a batch from a path, ``"-"`` for standard input, or an open text stream."""
    if isinstance(source, (str, Path)):
        if str(source) == "-":
            return read_records(sys.stdin, fmt or "csv", "<stdin>")
        fmt = fmt or guess_format(str(source))
        with open(source, encoding="utf-8", newline="") as fh:
            return read_records(fh, fmt, str(source))
    return read_records(source, fmt or "csv", getattr(source, "name", "<stream>"))


def parse_text(text: str, fmt: str = "csv") -> RecordBatch:
    return read_records(io.StringIO(text, newline=""), fmt, "<text>")
