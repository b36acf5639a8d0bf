import random
from fractions import Fraction

import pytest

from helpers import tpoly
from portraits.errors import PoleAtPlaceError
from portraits.exactalg import QQ, QuotientField, RatFunc, rational_roots, squarefree_decomposition
from portraits.places import INFINITE_VALUATION, Place, reduce_point, reduce_scalar, valuation


def rf(num, den="1"):
    return RatFunc(tpoly(num), tpoly(den))


def test_valuation_examples():
    assert valuation(rf("t^2", "t-1"), Place.finite(tpoly("t"))) == 2
    assert valuation(rf("t^2+1", "t"), Place.infinity()) == -1
    for p in (Place.at(3), Place.finite(tpoly("t^2+1")), Place.infinity()):
        assert valuation(rf("5"), p) == 0
    assert valuation(rf("0"), Place.at(0)) == INFINITE_VALUATION


def test_reduce_scalar_examples():
    assert reduce_scalar(rf("t^2+t+3"), Place.finite(tpoly("t"))) == 3
    fld = QuotientField(tpoly("t^2+1"))
    got = reduce_scalar(rf("t", "t+1"), Place.finite(tpoly("t^2+1")))
    assert got == fld.convert(tpoly("(t+1)/2"))
    assert reduce_scalar(rf("2*t+1", "t"), Place.infinity()) == 2
    with pytest.raises(PoleAtPlaceError):
        reduce_scalar(rf("1", "t"), Place.at(0))


def test_reduce_point_examples():
    p = Place.finite(tpoly("t"))
    assert reduce_point((tpoly("t"), tpoly("1")), p).x == 0
    assert reduce_point((tpoly("1"), tpoly("t")), p).is_infinity
    r = reduce_point((tpoly("t^2+t"), tpoly("t")), p)
    assert (r.x, r.y) == (1, 1)


def _random_poly(rng, deg):
    return tpoly("+".join(f"({rng.randint(-5, 5)})*t^{i}" for i in range(deg + 1)) + f"+t^{deg + 1}")


def test_product_formula():
    """Sum of local_degree * valuation over all places is zero."""
    rng = random.Random(7)
    for _ in range(30):
        x = RatFunc(_random_poly(rng, rng.randint(0, 5)) * rng.randint(1, 9), _random_poly(rng, rng.randint(0, 5)))
        if not x:
            continue
        total = valuation(x, Place.infinity())
        # places dividing numerator or denominator; squarefree factors stand in for
        # irreducibles here, which is harmless because valuations add over factors
        for part in (x.num, x.den):
            for f, _ in squarefree_decomposition(part):
                if f.degree < 1:
                    continue
                for r in rational_roots(f):
                    total += valuation(x, Place.at(r))
                rest = f
                for r in rational_roots(f):
                    rest = rest // tpoly(f"t-({r})")
                if rest.degree >= 1:
                    total += rest.degree * valuation(x, Place.finite(rest))
        assert total == 0


def test_reduce_point_is_scaling_invariant():
    rng = random.Random(11)
    places = [Place.at(0), Place.at(Fraction(-1, 2)), Place.finite(tpoly("t^2+1")), Place.infinity()]
    for _ in range(25):
        x, y = _random_poly(rng, rng.randint(0, 3)), _random_poly(rng, rng.randint(0, 3))
        scale = _random_poly(rng, rng.randint(0, 2)) * Fraction(rng.randint(1, 7), rng.randint(1, 7))
        for p in places:
            assert reduce_point((x, y), p) == reduce_point((x * scale, y * scale), p)


@pytest.mark.parametrize("modulus", ["t^2+1", "t^3-2"])
def test_residue_field_inverses(modulus):
    place = Place.finite(tpoly(modulus))
    fld = place.residue_field
    rng = random.Random(3)
    for _ in range(20):
        a = fld.convert(_random_poly(rng, rng.randint(0, 4)))
        if a:
            assert a * a.inverse() == fld.one


def test_degree_one_residue_field_is_rational():
    assert Place.at(2).residue_field is QQ
    assert Place.at(2).rational_value == 2
    assert Place.finite(tpoly("t^2-2")).local_degree == 2
