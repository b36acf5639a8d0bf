"""Places of QQ(t): valuations, residue maps and reduction of projective points.

A finite place is given by a monic polynomial q in t, assumed irreducible; it
stands for the deg(q) conjugate geometric places at the roots of q.  The
residue field is QQ when deg(q) = 1 and QQ[t]/(q) otherwise.  The infinite
place has uniformizer 1/t and residue field QQ.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import inf

from .errors import DegenerateInputError, PoleAtPlaceError
from .exactalg import QQ, Poly, QuotientField, RatFunc

#: valuation of the zero element
INFINITE_VALUATION = inf


@dataclass(frozen=True)
class Place:
    q: Poly | None = None

    def __post_init__(self):
        if self.q is not None:
            if self.q.dom is not QQ:
                raise TypeError("a finite place is a polynomial over QQ")
            if self.q.degree < 1:
                raise DegenerateInputError("a finite place needs a nonconstant polynomial")
            object.__setattr__(self, "q", self.q.monic())

    @classmethod
    def finite(cls, q):
        return cls(q)

    @classmethod
    def infinity(cls):
        return cls(None)

    @classmethod
    def at(cls, c):
        """The degree-one place t = c."""
        return cls(Poly([-Fraction(c), 1], QQ, "t"))

    @property
    def is_infinity(self):
        return self.q is None

    @property
    def local_degree(self):
        return 1 if self.q is None else self.q.degree

    @cached_property
    def residue_field(self):
        if self.q is None or self.q.degree == 1:
            return QQ
        return QuotientField(self.q)

    @property
    def rational_value(self):
        """The constant c for a place t = c, else None."""
        if self.q is not None and self.q.degree == 1:
            return -self.q.coeff(0)
        return None

    def __str__(self):
        return "inf" if self.q is None else str(self.q)


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc(x)
    return RatFunc(Poly.const(x, QQ, "t"))


def poly_order(p, q):
    """Largest k with q^k dividing p (p nonzero)."""
    if not p:
        return INFINITE_VALUATION
    k = 0
    while p.degree >= q.degree:
        quo, rem = divmod(p, q)
        if rem:
            break
        p = quo
        k += 1
    return k


def valuation(x, place):
    x = _as_ratfunc(x)
    if not x:
        return INFINITE_VALUATION
    if place.is_infinity:
        return x.den.degree - x.num.degree
    return poly_order(x.num, place.q) - poly_order(x.den, place.q)


def _reduce_poly(p, place):
    """Residue of a polynomial in t at a finite place."""
    field = place.residue_field
    if field is QQ:
        return p(place.rational_value)
    return field.convert(p)


def reduce_scalar(x, place):
    x = _as_ratfunc(x)
    v = valuation(x, place)
    if v < 0:
        raise PoleAtPlaceError(f"{x} has a pole at {place}")
    field = place.residue_field
    if not x:
        return field.zero
    if place.is_infinity:
        if v > 0:
            return QQ.zero
        return x.num.lc / x.den.lc
    if v > 0:
        return field.zero
    return _reduce_poly(x.num, place) / _reduce_poly(x.den, place)


@dataclass(frozen=True)
class ResidueProjPoint:
    x: object
    y: object

    @classmethod
    def normalized(cls, x, y, field):
        if y:
            return cls(x / y, field.one)
        if not x:
            raise DegenerateInputError("[0:0] is not a point")
        return cls(field.one, field.zero)

    @property
    def is_infinity(self):
        return not self.y

    def __str__(self):
        return "inf" if self.is_infinity else str(self.x)


def _pair(point):
    x, y = point
    if not isinstance(x, Poly):
        x = Poly.const(x, QQ, "t")
    if not isinstance(y, Poly):
        y = Poly.const(y, QQ, "t")
    return x, y


def reduce_point(point, place):
    """Reduction of [x : y] (polynomials in t, any common factor allowed)."""
    from .exactalg import poly_gcd

    x, y = _pair(point)
    if not x and not y:
        raise DegenerateInputError("[0:0] is not a point")
    g = poly_gcd(x, y)
    if g.degree > 0:
        x, y = x // g, y // g
    field = place.residue_field
    if place.is_infinity:
        top = max(x.degree, y.degree)
        return ResidueProjPoint.normalized(x.coeff(top), y.coeff(top), field)
    return ResidueProjPoint.normalized(_reduce_poly(x, place), _reduce_poly(y, place), field)
