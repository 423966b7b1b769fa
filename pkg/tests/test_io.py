import math

import pytest

import reference_data as P
from ordseries import (DateIndex, DuplicateIndex, IntIndex, ParseError, RealIndex, Series,
                       TimestampIndex, YearMonth, YearQuarter, read_csv, to_grid)
from ordseries.io import (dumps_csv, dumps_grid, format_number, loads_csv, loads_grid,
                          parse_cell, read_grid, write_csv)

FIXTURES = ["z1", "z2", "Z", "z1int", "z1na", "z2r", "zr", "zr3"]


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_round_trip_is_byte_identical(data_path, name):
    path = data_path / f"{name}.csv"
    text = path.read_text()
    assert dumps_csv(read_csv(path)) == text


def test_fixtures_match_constructors(data_path):
    assert read_csv(data_path / "z1.csv") == P.z1()
    assert read_csv(data_path / "Z.csv") == P.z()
    assert read_csv(data_path / "z1na.csv") == P.z1na()


@pytest.mark.parametrize("name,kind", [
    ("z1", TimestampIndex), ("Z", DateIndex), ("zr", RealIndex), ("zr3", YearMonth),
])
def test_autodetect(data_path, name, kind):
    assert type(read_csv(data_path / f"{name}.csv").index[0]) is kind


@pytest.mark.parametrize("text,kind", [
    ("2004-Q1", YearQuarter), ("17", IntIndex), ("-3.5", RealIndex),
])
def test_autodetect_remaining_kinds(text, kind):
    s = loads_csv(f"i,x\n{text},1\n")
    assert type(s.index[0]) is kind


def test_explicit_kind():
    s = loads_csv("i,x\n1,1\n2,2\n", kind="real")
    assert type(s.index[0]) is RealIndex
    with pytest.raises(ParseError):
        loads_csv("i,x\n1,1\n", kind="calendar")


def test_bad_date_reports_line(data_path):
    with pytest.raises(ParseError, match="line 3"):
        read_csv(data_path / "bad_date.csv")


@pytest.mark.parametrize("text,line", [
    ("i,x\n1,2\n3\n", 3),
    ("i,x\n1,2\n2,abc\n", 3),
    ("i,x,x\n1,2,3\n", 1),
    ("i,x\n1,2\n2,3\nzz,4\n", 4),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError, match=f"line {line}"):
        loads_csv(text)


def test_header_only(data_path):
    s = read_csv(data_path / "empty.csv")
    assert isinstance(s, Series) and s.nrow == 0
    with pytest.raises(ParseError):
        loads_csv("")
    with pytest.raises(ParseError):
        loads_csv("index\n1\n")


def test_on_duplicate():
    text = "i,x\n1,1\n1,3\n"
    with pytest.raises(DuplicateIndex):
        loads_csv(text)
    assert loads_csv(text, on_duplicate="mean").cells == (2.0,)


def test_cells():
    assert parse_cell("NA") is None and parse_cell("") is None
    assert parse_cell("Inf") == math.inf and parse_cell("-Inf") == -math.inf
    assert math.isnan(parse_cell("NaN"))
    with pytest.raises(ValueError):
        parse_cell("1,5")
    assert format_number(None) == "NA"
    assert format_number(0.1 + 0.2) == "0.3"
    assert format_number(-math.inf) == "-Inf"


def test_special_values_round_trip():
    s = Series([IntIndex(1), IntIndex(2), IntIndex(3), IntIndex(4)],
               [math.inf, -math.inf, None, 1e-300])
    back = loads_csv(dumps_csv(s))
    assert back.cells[:3] == (math.inf, -math.inf, None) and back.cells[3] == 1e-300


def test_write_csv(tmp_path):
    out = tmp_path / "z.csv"
    write_csv(P.z(), out)
    assert read_csv(out) == P.z()


def test_grid_round_trip(tmp_path):
    g = to_grid(P.zr3())
    text = dumps_grid(g)
    assert text.startswith("# grid start=2000-01 freq=12\n")
    assert loads_grid(text) == g
    path = tmp_path / "g.csv"
    path.write_text(text)
    assert read_grid(path) == g


@pytest.mark.parametrize("text", [
    "", "index,x\n", "# grid start=2000-01 freq=abc\nx\n", "# grid start=2000-01 freq=-1\nx\n",
])
def test_grid_parse_errors(text):
    with pytest.raises(ParseError):
        loads_grid(text)
