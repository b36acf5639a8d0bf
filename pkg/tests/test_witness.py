import random
from fractions import Fraction

import pytest

from helpers import parse_map, parse_point, tpoly
from portraits.dynmap import IterationContext, PlaceSet, Portrait, bad_reduction_divisor, portrait_mod_place
from portraits.errors import PreconditionError
from portraits.exactalg import poly_gcd
from portraits.places import Place
from portraits.witness import (
    Status,
    cross_difference,
    exclusion_polynomials,
    find_witness,
    portrait_grid,
    starting_point_sweep,
)

QUAD = "z^2+t"


@pytest.mark.parametrize("alpha, m, n, expected", [("0", 0, 2, "t^2+t"), ("0", 1, 1, "t"), ("1", 1, 1, "t^2+2*t")])
def test_cross_difference_examples(alpha, m, n, expected):
    assert cross_difference(parse_map(QUAD), parse_point(alpha), m, n) == tpoly(expected)


def test_cross_difference_vanishes_for_preperiodic_points():
    assert not cross_difference(parse_map("z^2-2"), parse_point("-2"), 1, 1)


def test_find_witness_examples():
    phi = parse_map(QUAD)
    rep = find_witness(phi, parse_point("0"), (0, 2), bad_reduction_divisor(phi))
    assert rep.divisor == tpoly("t+1") and rep.rational_witnesses == (-1,) and rep.status is Status.REALIZABLE
    assert rep.as_dict() == {
        "requested": [0, 2],
        "divisor": "t+1",
        "rational_witnesses": ["-1"],
        "infinity_is_witness": False,
        "status": "Realizable",
    }
    for n in range(1, 7):
        rep = find_witness(phi, parse_point("0"), (1, n))
        assert rep.status is Status.NOT_REALIZABLE and rep.divisor == 1
    rep = find_witness(phi, parse_point("1"), (1, 1))
    assert rep.divisor == tpoly("t+2") and rep.rational_witnesses == (-2,)


def test_degree_cap_gives_capped_status():
    rep = find_witness(parse_map(QUAD), parse_point("0"), (3, 8), ctx=IterationContext(degree_cap=2**6))
    assert rep.status is Status.CAPPED


def test_user_places_are_excluded():
    phi = parse_map(QUAD)
    rep = find_witness(phi, parse_point("0"), (0, 2), PlaceSet(tpoly("t+1")))
    assert rep.status is Status.NOT_REALIZABLE


def test_global_preperiodic_branch():
    phi = parse_map("z^2-2")
    rep = find_witness(phi, parse_point("2"), (0, 1))
    assert rep.status is Status.REALIZABLE and rep.cofinite and rep.infinity_is_witness
    for c in rep.rational_witnesses:
        assert portrait_mod_place(phi, parse_point("2"), Place.at(c), 3) == Portrait(0, 1)
    # preperiodic with a different portrait: nowhere
    rep = find_witness(phi, parse_point("-2"), (0, 1))
    assert rep.status is Status.NOT_REALIZABLE
    grid = portrait_grid(phi, parse_point("2"), 0, 1)
    assert grid.cells[(0, 1)].report.status is Status.REALIZABLE


def test_grid_for_totally_ramified_start():
    grid = portrait_grid(parse_map(QUAD), parse_point("0"), 3, 4)
    assert len(list(grid.rows())) == 16
    for m, n, cell in grid.rows():
        if m == 1:
            assert cell.report.status is Status.NOT_REALIZABLE and "Y" in cell.annotation
        else:
            assert cell.report.status is Status.REALIZABLE and not cell.annotation
    rows = list(grid.csv_rows())
    assert rows[0] == ["m", "n", "status", "witness"] and rows[2] == [0, 2, "Realizable", "-1"]


def test_x_obstruction_for_inverse_square_type_maps():
    for text in ("1/z^2", "t/z^2"):
        phi = parse_map(text)
        for alpha in ("2", "-1/3", "5"):
            for m in range(4):
                assert find_witness(phi, parse_point(alpha), (m, 2)).status is Status.NOT_REALIZABLE


def test_sweep_examples():
    phi = parse_map(QUAD)
    out = starting_point_sweep(phi, (0, 1))
    assert [c for c, _ in out] == list(range(-3, 4))
    assert all(rep.status is Status.REALIZABLE for _, rep in out)
    (c, rep), = starting_point_sweep(phi, (0, 2), candidates=[0])
    assert rep.rational_witnesses == (-1,)
    (c, rep), = starting_point_sweep(phi, (1, 1), candidates=[Fraction(1, 2)])
    assert rep == find_witness(phi, parse_point("1/2"), (1, 1))


def test_sweep_preconditions():
    with pytest.raises(PreconditionError):
        starting_point_sweep(parse_map("z^2"), (0, 1))
    with pytest.raises(PreconditionError):
        starting_point_sweep(parse_map("z^3-2*z+1"), (1, 1))


MAPS = ["z^2+t", "z^2/(z-t)", "(z^2-t)/(z+1)", "z^3+t*z+1"]


@pytest.mark.parametrize("text", MAPS)
def test_soundness_and_exclusions(text):
    phi = parse_map(text)
    ctx = IterationContext()
    for alpha in ("1", "-2", "1/3", "t"):
        point = parse_point(alpha)
        for m in range(3):
            for n in range(1, 4 if phi.d == 2 else 3):
                rep = find_witness(phi, point, (m, n), ctx=ctx)
                if rep.cofinite or rep.status is Status.CAPPED:
                    continue
                for c in rep.rational_witnesses:
                    assert portrait_mod_place(phi, point, Place.at(c), m + n + 1) == Portrait(m, n)
                for x in exclusion_polynomials(phi, point, m, n, PlaceSet(), ctx):
                    if x:
                        assert poly_gcd(rep.divisor, x).degree <= 0
                assert (rep.status is Status.REALIZABLE) == (rep.divisor.degree >= 1 or rep.infinity_is_witness)


@pytest.mark.parametrize("text", MAPS[:3])
def test_completeness_at_degree_one_places(text):
    phi = parse_map(text)
    bad = bad_reduction_divisor(phi)
    rng = random.Random(text)
    alpha = parse_point("1")
    hits = 0
    for _ in range(60):
        c = Fraction(rng.randint(-8, 8), rng.randint(1, 8))
        place = Place.at(c)
        if place in bad:
            continue
        got = portrait_mod_place(phi, alpha, place, 10)
        if got is None or got.m > 3 or got.n > 4:
            continue
        hits += 1
        rep = find_witness(phi, alpha, got)
        assert rep.divisor(c) == 0
    assert hits > 0
