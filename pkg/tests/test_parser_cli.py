import csv
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import tpoly, zpoly
from portraits.cli import main
from portraits.errors import ParseError, PreconditionError
from portraits.parser import (
    MAX_EXPONENT,
    parse_exclusions,
    parse_expression,
    parse_map,
    parse_map_expression,
    parse_place,
    parse_point,
    parse_portrait,
)


def test_map_examples():
    phi = parse_map("z^2 + t")
    assert (phi.f, phi.d) == (zpoly("z^2+t"), 2)
    phi = parse_map("(z^2 - t^2)/(z - t)")
    assert (phi.f, phi.g, phi.d) == (zpoly("z+t"), zpoly("1"), 1)
    assert parse_map_expression("z^2 + t").source == "z^2 + t"


def test_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse_map("z^2 + + t")
    assert (info.value.line, info.value.column) == (1, 7)
    with pytest.raises(ParseError) as info:
        parse_map("z^2\n  + t )")
    assert (info.value.line, info.value.column) == (2, 7)


@pytest.mark.parametrize(
    "text",
    ["z/(t-t)", "2 z", "z^-1", "z^1.5", "x+1", "(z+1", "", "z^" + str(MAX_EXPONENT + 1), "*".join(["z^512"] * 9)],
)
def test_rejected_inputs(text):
    with pytest.raises(ParseError):
        parse_expression(text)


def test_deep_nesting_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_expression("(" * 5000 + "z" + ")" * 5000)
    with pytest.raises(ParseError):
        parse_expression("-" * 5000 + "z")


def test_points_places_portraits():
    assert str(parse_point("(t^2+1)/t")) == "(t^2+1)/t"
    assert parse_point("inf").is_infinity
    with pytest.raises(ParseError):
        parse_point("z+1")
    assert str(parse_place("t-3")) == "t-3" and parse_place("inf").is_infinity
    assert str(parse_place("2*t^2+2")) == "t^2+1"
    with pytest.raises(PreconditionError):
        parse_place("t^2-1")
    with pytest.raises(PreconditionError):
        parse_place("t^4+1")
    assert parse_place("t^4+1", trust=True).local_degree == 4
    s = parse_exclusions("t^2;t+1;inf")
    assert s.finite_part == tpoly("t^2+t") and s.include_infinity
    assert tuple(parse_portrait("(2,3)")) == (2, 3)
    with pytest.raises(ParseError):
        parse_portrait("(2;3)")


_atoms = st.sampled_from(["z", "t", "1", "2", "3/4", "(z-t)", "(t+1)", "(z^2+t)"])


@st.composite
def expressions(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return draw(_atoms)
    left = draw(expressions(depth=depth - 1))
    right = draw(expressions(depth=depth - 1))
    op = draw(st.sampled_from(["+", "-", "*", "/"]))
    if op == "/":
        right = f"({right}+z^3+5)"
    out = f"({left}){op}({right})"
    if draw(st.booleans()):
        out = f"({out})^{draw(st.integers(0, 3))}"
    return out


@settings(max_examples=80, deadline=None)
@given(expressions())
def test_printed_maps_round_trip(text):
    try:
        phi = parse_map(text)
    except PreconditionError:
        return
    again = parse_map(str(phi))
    assert (again.f, again.g, again.d) == (phi.f, phi.g, phi.d)


@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=60))
def test_parser_never_crashes_on_bytes(data):
    try:
        parse_expression(data)
    except ParseError:
        pass


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="zt0123456789+-*/^() \n", max_size=40))
def test_parser_never_crashes_on_grammar_soup(text):
    try:
        parse_expression(text)
    except ParseError:
        pass


# --- command line -----------------------------------------------------------


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_witness_json(capsys):
    code, out, _ = run(capsys, "witness", "--map", "z^2+t", "--alpha", "0", "--m", "0", "--n", "2", "--json")
    assert code == 0
    assert json.loads(out) == {
        "requested": [0, 2],
        "divisor": "t+1",
        "rational_witnesses": ["-1"],
        "infinity_is_witness": False,
        "status": "Realizable",
    }


def test_cli_exit_codes(capsys):
    assert run(capsys, "witness", "--map", "z^2 + + t", "--alpha", "0", "--m", "0", "--n", "2")[0] == 4
    assert run(capsys, "portrait", "--map", "z^2+t", "--alpha", "0", "--place", "t^2-1")[0] == 2
    assert run(capsys, "portrait", "--map", "z^2+t", "--alpha", "0", "--place", "inf")[0] == 2
    assert run(capsys, "witness", "--map", "z^2+t", "--alpha", "0", "--m", "5", "--n", "5", "--degree-cap", "64")[0] == 3
    assert run(capsys, "witness", "--map", "z^2+t", "--m", "0", "--n", "2")[0] == 2
    assert run(capsys, "construct", "--degree", "4", "--points", "0,1,2", "--portraits", "(0,1);(0,1);(0,1)")[0] == 3


def test_cli_grid_csv(capsys, tmp_path):
    path = tmp_path / "grid.csv"
    code, out, _ = run(capsys, "grid", "--map", "z^2+t", "--alpha", "0", "--max-m", "1", "--max-n", "2", "--csv", str(path))
    assert code == 0 and "m in Y(phi,alpha)" in out
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["m", "n", "status", "witness"] and len(rows) == 5
    assert rows[2] == ["0", "2", "Realizable", "-1"]


def test_cli_other_commands(capsys):
    code, out, _ = run(capsys, "height", "--alpha", "(t^2+1)/t", "--map", "z^2/(z-t)", "--json")
    assert json.loads(out) == {"point": "(t^2+1)/t", "height": 2, "map": "(z^2)/(z-t)", "comparison_bound": 4}
    code, out, _ = run(capsys, "canheight", "--map", "z^2+t", "--alpha", "0", "--eps", "1/1024", "--json")
    assert json.loads(out)["center"] == "1/2"
    code, out, _ = run(capsys, "portrait", "--map", "z^2+t", "--alpha", "1", "--place", "t+2", "--json")
    assert json.loads(out)["portrait"] == [1, 1]
    code, out, _ = run(capsys, "xset", "--map", "1/z^2", "--max-n", "4", "--json")
    assert json.loads(out) == {"x_set": [2], "power_map_type": "z^-d"}
    code, out, _ = run(capsys, "yset", "--map", "z^2+t", "--alpha", "0", "--max-m", "6", "--json")
    assert json.loads(out) == {"y_set": [1]}
    code, out, _ = run(capsys, "abc", "--a", "t^2", "--b", "1-t^2", "--json")
    assert json.loads(out) == {"lhs": 2, "rhs": 2, "holds": True, "slack": 0}
    code, out, _ = run(capsys, "abc", "--f", "z^3-z", "--gamma", "t^4", "--json")
    assert json.loads(out)["rhs"] == 9
    code, out, _ = run(capsys, "sweep", "--map", "z^2+t", "--m", "0", "--n", "2", "--candidates", "0", "--json")
    assert json.loads(out)[0]["rational_witnesses"] == ["-1"]
    code, out, _ = run(capsys, "construct", "--degree", "3", "--points", "0,1", "--portraits", "(0,1);(0,2)", "--json")
    assert json.loads(out) == {"status": "Realizable", "assignment": {"a": "-2", "b": "0"}, "verified": True}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "portraits", "witness", "--map", "z^2+t", "--alpha", "1", "--m", "1", "--n", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "Realizable" in proc.stdout and "-2" in proc.stdout
