"""Mason-Stothers over QQ(t) and the zero-place lower bound derived from it.

Place counts are geometric: a finite place of degree e counts e times, so the
number of zero places of a polynomial is the degree of its squarefree part.
"""

from dataclasses import dataclass

from .errors import DegenerateInputError, PreconditionError
from .exactalg import (
    QQ,
    Poly,
    PolynomialRing,
    RatFunc,
    RationalFunctionField,
    poly_gcd,
    squarefree_part,
)


@dataclass(frozen=True)
class AbcReport:
    lhs: int
    rhs: int

    @property
    def holds(self):
        return self.lhs <= self.rhs

    @property
    def slack(self):
        return self.rhs - self.lhs

    def as_dict(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds, "slack": self.slack}


def _deg(p):
    return max(p.degree, 0)


def mason_stothers_check(a, b):
    """Compare max degree of A, B, A+B with the radical degree of A*B*(A+B) minus one."""
    c = a + b
    if not a or not b or not c:
        raise PreconditionError("A, B and A+B must be nonzero")
    for x, y in ((a, b), (a, c), (b, c)):
        if poly_gcd(x, y).degree > 0:
            raise PreconditionError("A, B and A+B must be pairwise coprime")
    if a.degree == b.degree == c.degree == 0:
        raise PreconditionError("A, B and A+B are all constant")
    lhs = max(_deg(a), _deg(b), _deg(c))
    rhs = squarefree_part(a * b * c).degree - 1
    return AbcReport(lhs, rhs)


def _ratfunc_coeffs(f):
    if isinstance(f.dom, RationalFunctionField):
        return list(f.coeffs)
    if isinstance(f.dom, PolynomialRing):
        return [RatFunc(c) for c in f.coeffs]
    if f.dom is QQ:
        return [RatFunc(Poly.const(c, QQ, "t")) for c in f.coeffs]
    raise TypeError("coefficients must lie in QQ or QQ(t)")


def root_height_bound(coeffs):
    """Upper bound e * max h(a_i) for the total height of the roots of a monic f."""
    e = len(coeffs) - 1
    return e * max(c.height for c in coeffs[:-1])


def zero_place_count_check(f, gamma):
    """Zero places of f(gamma) against h(gamma) - 3 e^2 * (bound on the root heights)."""
    cs = _ratfunc_coeffs(f)
    e = len(cs) - 1
    if e < 3:
        raise PreconditionError("f must have degree at least 3")
    if cs[-1] != 1:
        raise PreconditionError("f must be monic")
    fk = Poly(cs, RationalFunctionField("t"), "z")
    if poly_gcd(fk, fk.derivative()).degree > 0:
        raise PreconditionError("f has repeated roots")
    if not isinstance(gamma, RatFunc):
        gamma = RatFunc(gamma) if isinstance(gamma, Poly) else RatFunc(Poly.const(gamma, QQ, "t"))
    if gamma.is_constant():
        raise PreconditionError("gamma must be nonconstant")
    value = fk(gamma)
    if not value:
        raise DegenerateInputError("gamma is a root of f")
    zeros = squarefree_part(value.num).degree
    if value.den.degree > value.num.degree:
        zeros += 1
    lhs = gamma.height - 3 * e * e * root_height_bound(cs)
    return AbcReport(lhs, zeros)
