from pathlib import Path

import pytest

from neutrosophic import NeutrosophicTriple
from neutrosophic.records import DuplicateId, ParseError, RecordOutOfRange, guess_format, parse_input, parse_text

DATA = Path(__file__).parent / "data"


def test_csv_single_record():
    batch = parse_text("id,T,I,F\na,1,0,0\n")
    assert len(batch) == 1
    rec = batch.records[0]
    assert (rec.id, rec.triple, rec.line) == ("a", NeutrosophicTriple(1.0, 0.0, 0.0), 2)


def test_jsonl_single_record():
    batch = parse_text('{"t":0.6,"i":0.5,"f":0.4}\n', "jsonl")
    assert batch.records[0].triple == NeutrosophicTriple(0.6, 0.5, 0.4)
    assert batch.records[0].id is None


def test_fixture_files_agree():
    csv_batch = parse_input(DATA / "three.csv")
    json_batch = parse_input(DATA / "three.jsonl")
    assert [r.id for r in csv_batch] == ["a", "b", "c"]
    assert [r.triple for r in csv_batch] == [r.triple for r in json_batch]
    # the blank line in the JSON-lines file shifts the last record
    assert [r.line for r in json_batch] == [1, 2, 4]


def test_header_variants():
    batch = parse_text("﻿F , t,I\n0.1,0.2,0.3\n")
    assert batch.records[0].triple == NeutrosophicTriple(0.2, 0.3, 0.1)
    assert batch.records[0].id is None


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("", 1, "empty input"),
        ("id,T,I\na,1,0\n", 1, "header"),
        ("T,I,F\n0.1,0.2\n", 2, "expected 3 fields"),
        ("T,I,F\n0.1,0.2,0.3\n0.1,x,0.3\n", 3, "column I"),
        ("T,I,F\n0.1,0.2,nan\n", 2, "F="),
    ],
)
def test_csv_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_text(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)
    assert str(exc.value).startswith(f"line {line}:")


def test_out_of_range_has_record_context():
    with pytest.raises(RecordOutOfRange) as exc:
        parse_text("id,T,I,F\na,1.5,0,0\n")
    err = exc.value
    assert (err.line, err.component, err.value, err.record_id) == (2, "T", 1.5, "a")


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ('{"t":0.1,"i":0.2}\n', 1, "missing key"),
        ('{"t":0.1,"i":0.2,"f":0.3}\n[1,2]\n', 2, "JSON object"),
        ('{"t":0.1,"i":0.2,"f":0.3}\n{oops\n', 2, "invalid JSON"),
        ('{"t":"0.1","i":0.2,"f":0.3}\n', 1, "not a number"),
        ('{"t":true,"i":0.2,"f":0.3}\n', 1, "not a number"),
        ('{"t":0.1,"i":0.2,"f":0.3,"id":[1]}\n', 1, "id must be"),
        ('{"t":0.1,"i":-0.2,"f":0.3}\n', 1, "I="),
    ],
)
def test_jsonl_errors(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_text(text, "jsonl")
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_duplicate_ids_rejected():
    with pytest.raises(DuplicateId) as exc:
        parse_text("id,T,I,F\na,1,0,0\nb,0,0,1\na,0,1,0\n")
    assert exc.value.line == 4 and exc.value.record_id == "a"
    assert "line 2" in str(exc.value)


def test_missing_ids_may_repeat():
    batch = parse_text("id,T,I,F\n,1,0,0\n,0,0,1\n")
    assert [r.id for r in batch] == [None, None]


def test_guess_format():
    assert guess_format("x.jsonl") == "jsonl"
    assert guess_format("x.NDJSON") == "jsonl"
    assert guess_format("x.csv") == "csv"
    assert guess_format("-") == "csv"


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_text("T,I,F\n", "xml")
