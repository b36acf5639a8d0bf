"""Weil and canonical heights on P^1(QQ(t)), measured in degree units."""

from dataclasses import dataclass
from fractions import Fraction

from .dynmap import IterationContext, ProjPointK
from .errors import NotAMorphismError, PreconditionError


def weil_height(point):
    """max(deg x, deg y) for a point [x : y] or an element of QQ(t)."""
    x, y = ProjPointK.of(point)
    return max(x.degree, y.degree, 0)


def height_comparison_bound(phi):
    """Explicit constant C with |h(phi(P)) - d h(P)| <= C for every P."""
    res = phi.homogeneous_resultant()
    if not res:
        raise NotAMorphismError("homogeneous pair has zero resultant")
    return res.degree + 2 * phi.coefficient_degree()


@dataclass(frozen=True)
class CanonicalHeightEstimate:
    center: Fraction
    radius: Fraction
    iterations_used: int

    @property
    def low(self):
        return self.center - self.radius

    @property
    def high(self):
        return self.center + self.radius

    def __contains__(self, value):
        return self.low <= value <= self.high

    def __str__(self):
        return f"{self.center} +/- {self.radius}"


def iterations_for(c, d, eps):
    """Least N with c*d / (d^N (d-1)) <= eps."""
    n = 0
    while Fraction(c * d, d ** n * (d - 1)) > eps:
        n += 1
    return n


def canonical_height(phi, alpha, eps, ctx=None):
    d = phi.d
    if d < 2:
        raise PreconditionError("canonical heights need degree at least 2")
    eps = Fraction(eps)
    if eps <= 0:
        raise PreconditionError("tolerance must be positive")
    ctx = ctx or IterationContext()
    c = height_comparison_bound(phi)
    n = 0 if c == 0 else iterations_for(c, d, eps)
    point = ctx.orbit(phi, alpha, n)[n]
    radius = Fraction(c * d, d ** n * (d - 1))
    return CanonicalHeightEstimate(Fraction(weil_height(point), d ** n), radius, n)
