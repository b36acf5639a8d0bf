import random
from fractions import Fraction

import pytest

from helpers import parse_map, parse_point
from portraits.dynmap import iterate_point
from portraits.heights import canonical_height, height_comparison_bound, weil_height


@pytest.mark.parametrize("point, h", [("(t^2+1)/t", 2), ("7/3", 0), ("t^5", 5), ("inf", 0)])
def test_weil_height_examples(point, h):
    assert weil_height(parse_point(point)) == h


@pytest.mark.parametrize("text, c", [("z^2+t", 2), ("z^2", 0), ("z^2/(z-t)", 4)])
def test_comparison_bound_examples(text, c):
    assert height_comparison_bound(parse_map(text)) == c


def test_canonical_height_examples():
    est = canonical_height(parse_map("z^2+t"), parse_point("0"), Fraction(1, 4))
    assert est.center == Fraction(1, 2) and est.radius <= Fraction(1, 4)
    est = canonical_height(parse_map("z^2"), parse_point("t"), Fraction(1, 4))
    assert (est.center, est.radius) == (1, 0)
    est = canonical_height(parse_map("z^2"), parse_point("5"), Fraction(1, 4))
    assert (est.center, est.radius) == (0, 0)


def _random_point(rng, hmax):
    deg_n, deg_d = rng.randint(0, hmax), rng.randint(0, hmax)
    num = "+".join(f"({rng.randint(-9, 9)})*t^{i}" for i in range(deg_n)) or "0"
    den = "+".join(f"({rng.randint(-9, 9)})*t^{i}" for i in range(deg_d)) or "0"
    num += f"+({rng.choice([-3, -1, 1, 2])})*t^{deg_n}"
    den += f"+t^{deg_d}"
    return parse_point(f"({num})/({den})")


@pytest.mark.parametrize("text", ["z^2+t", "z^2/(z-t)", "z^3+t*z+1", "(t*z^2+1)/(z^2-t^3)"])
def test_comparison_bound_holds(text):
    phi = parse_map(text)
    c = height_comparison_bound(phi)
    rng = random.Random(text)
    for _ in range(60):
        p = _random_point(rng, 20)
        assert abs(weil_height(iterate_point(phi, p, 1)) - phi.d * weil_height(p)) <= c


def test_canonical_height_intervals_nest():
    phi = parse_map("z^2/(z-t)")
    alpha = parse_point("t+1")
    prev = None
    for k in range(1, 8):
        est = canonical_height(phi, alpha, Fraction(1, 2**k))
        if prev is not None:
            assert max(prev.low, est.low) <= min(prev.high, est.high)
        prev = est


@pytest.mark.parametrize(
    "text, d, m",
    [("z^2+t", 2, 0), ("z^3-2*z+t", 3, 0), ("z^3+t*z", 3, 1), ("z^3+t*z+5", 3, 1)],
)
def test_few_constants_have_small_canonical_height(text, d, m):
    """Constants certified to lie below 1/d number at most m."""
    phi = parse_map(text)
    below = []
    for c in range(-10, 11):
        est = canonical_height(phi, parse_point(str(c)), Fraction(1, 64 * d))
        if est.high < Fraction(1, d):
            below.append(c)
    assert len(below) <= m
    if text == "z^3+t*z":
        assert below == [0]
