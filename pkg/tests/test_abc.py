import random
from fractions import Fraction

import pytest
import sympy

from helpers import T_SYM, to_sympy, tpoly, zpoly
from portraits.abc_theorem import mason_stothers_check, zero_place_count_check
from portraits.errors import PreconditionError
from portraits.exactalg import QQ, Poly, RatFunc, poly_gcd


@pytest.mark.parametrize("a, b, lhs, rhs", [("t^2", "1-t^2", 2, 2), ("t", "1", 1, 1), ("t^4", "1-t^4", 4, 4)])
def test_mason_stothers_examples(a, b, lhs, rhs):
    rep = mason_stothers_check(tpoly(a), tpoly(b))
    assert (rep.lhs, rep.rhs, rep.holds, rep.slack) == (lhs, rhs, True, rhs - lhs)


def test_mason_stothers_preconditions():
    with pytest.raises(PreconditionError):
        mason_stothers_check(tpoly("t*(t+1)"), tpoly("t"))
    with pytest.raises(PreconditionError):
        mason_stothers_check(tpoly("2"), tpoly("3"))
    with pytest.raises(PreconditionError):
        mason_stothers_check(tpoly("t"), tpoly("-t"))


def _radical_degree(expr):
    """Number of distinct complex roots, via sympy's squarefree part."""
    return sympy.Poly(expr, T_SYM).sqf_part().degree()


@pytest.mark.parametrize(
    "f, gamma, zeros",
    [("z*(z-1)*(z+1)", "t^4", 9), ("z^3-2", "t", 3), ("z*(z-1)*(z+1)", "t", 3)],
)
def test_zero_place_examples(f, gamma, zeros):
    g = tpoly(gamma)
    rep = zero_place_count_check(zpoly(f), g)
    assert rep.rhs == zeros and rep.holds
    value = to_sympy(zpoly(f)).subs(sympy.Symbol("z"), to_sympy(g))
    assert _radical_degree(sympy.expand(value)) == zeros


def test_zero_place_counts_infinity():
    # f(1/t) = (1 - t^3)/t^3: zeros at the three cube roots of 1 only
    gamma = RatFunc(tpoly("1"), tpoly("t"))
    assert zero_place_count_check(zpoly("z^3-1"), gamma).rhs == 3
    gamma = RatFunc(tpoly("t"), tpoly("t^2+1"))
    # gamma vanishes at infinity and so does f(gamma)
    rep = zero_place_count_check(zpoly("z^3-z^2+z"), gamma)
    num = sympy.numer(sympy.together(to_sympy(zpoly("z^3-z^2+z")).subs(sympy.Symbol("z"), T_SYM / (T_SYM**2 + 1))))
    assert rep.rhs == _radical_degree(num) + 1


def test_zero_place_preconditions():
    with pytest.raises(PreconditionError):
        zero_place_count_check(zpoly("z^3-1"), tpoly("5"))
    with pytest.raises(PreconditionError):
        zero_place_count_check(zpoly("z^2*(z-1)"), tpoly("t"))
    with pytest.raises(PreconditionError):
        zero_place_count_check(zpoly("z^2-1"), tpoly("t"))


def test_coefficients_in_qq_t():
    rep = zero_place_count_check(zpoly("z^3+t*z+1"), tpoly("t^5+2"))
    assert rep.holds


def _coprime_pair(rng, maxdeg):
    while True:
        a = Poly([Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(1, maxdeg + 1))], QQ, "t")
        b = Poly([Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(1, maxdeg + 1))], QQ, "t")
        c = a + b
        if not a or not b or not c or (a.degree <= 0 and b.degree <= 0 and c.degree <= 0):
            continue
        if all(poly_gcd(x, y).degree <= 0 for x, y in ((a, b), (a, c), (b, c))):
            return a, b, c


def test_mason_stothers_random_with_radical_oracle():
    rng = random.Random(2024)
    for _ in range(60):
        a, b, c = _coprime_pair(rng, 12)
        rep = mason_stothers_check(a, b)
        assert rep.holds
        assert rep.rhs == _radical_degree(sympy.expand(to_sympy(a) * to_sympy(b) * to_sympy(c))) - 1
        assert rep.rhs <= max(a.degree, 0) + max(b.degree, 0) + max(c.degree, 0)
