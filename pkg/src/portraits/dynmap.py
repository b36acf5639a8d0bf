"""Rational self-maps of P^1 over QQ(t), their iteration and reduction at places.

A map is stored as the affine parts f(z) = F(z,1), g(z) = G(z,1) of a coprime
pair of binary forms of common degree d, with coefficients in QQ[t], jointly
primitive and with g's leading coefficient monic.  Points are coprime pairs
[x : y] of polynomials in t.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ConstantMapError,
    DegenerateInputError,
    NotAMorphismError,
    PreconditionError,
    ResourceLimitError,
)
from .exactalg import (
    QQ,
    QQt,
    Poly,
    PolynomialRing,
    RatFunc,
    RationalFunctionField,
    content,
    exquo,
    homogeneous_resultant,
    poly_gcd,
    squarefree_part,
)
from .places import ResidueProjPoint, reduce_point

DEFAULT_DEGREE_CAP = 2 ** 14
DEFAULT_BOUND = 64

_T_ONE = Poly.const(1, QQ, "t")
_T_ZERO = Poly((), QQ, "t")


@dataclass(frozen=True, order=True)
class Portrait:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 1:
            raise PreconditionError(f"invalid portrait ({self.m},{self.n})")

    def __iter__(self):
        return iter((self.m, self.n))

    def __str__(self):
        return f"({self.m},{self.n})"


@dataclass(frozen=True)
class ProjPointK:
    """[x : y] with x, y in QQ[t] coprime; y monic, or [1 : 0]."""

    x: Poly
    y: Poly

    def __post_init__(self):
        x, y = self.x, self.y
        if not x and not y:
            raise DegenerateInputError("[0:0] is not a point")
        if not y:
            x = _T_ONE
        else:
            g = poly_gcd(x, y)
            if g.degree > 0:
                x, y = x // g, y // g
            lc = y.lc
            if lc != 1:
                x, y = x * (1 / lc), y * (1 / lc)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def infinity(cls):
        return cls(_T_ONE, _T_ZERO)

    @classmethod
    def of(cls, value):
        """Point from a rational, polynomial, rational function or "inf"."""
        if isinstance(value, ProjPointK):
            return value
        if isinstance(value, str) and value == "inf":
            return cls.infinity()
        if isinstance(value, RatFunc):
            return cls(value.num, value.den)
        if isinstance(value, Poly):
            return cls(value, _T_ONE)
        return cls(Poly.const(Fraction(value), QQ, "t"), _T_ONE)

    @property
    def is_infinity(self):
        return not self.y

    def as_ratfunc(self):
        if self.is_infinity:
            raise PreconditionError("the point at infinity has no affine coordinate")
        return RatFunc(self.x, self.y)

    def __iter__(self):
        return iter((self.x, self.y))

    def __str__(self):
        if self.is_infinity:
            return "inf"
        return str(self.as_ratfunc())


@dataclass(frozen=True)
class PlaceSet:
    finite_part: Poly = _T_ONE
    include_infinity: bool = False

    def __post_init__(self):
        fp = self.finite_part
        fp = squarefree_part(fp) if fp else _T_ONE
        object.__setattr__(self, "finite_part", fp)

    def __contains__(self, place):
        if place.is_infinity:
            return self.include_infinity
        return poly_gcd(self.finite_part, place.q).degree > 0

    def union(self, other):
        return PlaceSet(self.finite_part * other.finite_part, self.include_infinity or other.include_infinity)

    def __str__(self):
        parts = [] if self.finite_part.degree < 1 else [str(self.finite_part)]
        if self.include_infinity:
            parts.append("inf")
        return ";".join(parts) if parts else "none"


def _tdeg(p):
    return max((c.degree for c in p.coeffs if c), default=0)


@dataclass(frozen=True)
class RationalMap:
    f: Poly
    g: Poly
    d: int

    @property
    def degree(self):
        return self.d

    def homogeneous_resultant(self):
        return homogeneous_resultant(self.f, self.g, self.d)

    def coefficient_degree(self):
        """Largest t-degree among the coefficients of f and g."""
        return max(_tdeg(self.f), _tdeg(self.g))

    def is_polynomial(self):
        return self.g.degree == 0

    def __str__(self):
        if self.g == 1:
            return str(self.f)
        return f"({self.f})/({self.g})"


def _to_ring_pair(num, den):
    """Clear t-denominators of two polynomials in z jointly."""
    polys = []
    for p in (num, den):
        if isinstance(p.dom, RationalFunctionField):
            polys.append(p)
        elif isinstance(p.dom, PolynomialRing):
            polys.append(p.map_coeffs(RatFunc, RationalFunctionField("t"), "z"))
        else:
            polys.append(p.map_coeffs(lambda c: RatFunc(Poly.const(c, QQ, "t")), RationalFunctionField("t"), "z"))
    lcm = _T_ONE
    for p in polys:
        for c in p.coeffs:
            if c.den.degree > 0:
                lcm = lcm * exquo(c.den, poly_gcd(lcm, c.den))
    out = []
    for p in polys:
        cs = [exquo(c.num * lcm, c.den) for c in p.coeffs]
        out.append(Poly(cs, QQt, "z"))
    return out


def new_map(numerator, denominator=None):
    """Map z -> numerator/denominator; both are polynomials in z over QQ, QQ[t] or QQ(t)."""
    if denominator is None:
        denominator = Poly.const(1, QQt, "z")
    f, g = _to_ring_pair(numerator, denominator)
    if not g:
        raise DegenerateInputError("zero denominator")
    if not f and not g:
        raise DegenerateInputError("both numerator and denominator are zero")
    if f:
        h = poly_gcd(f, g)
        if h.degree > 0:
            f, g = exquo(f, h), exquo(g, h)
    c = content(f) if f else content(g)
    c = poly_gcd(c, content(g)) if f else c
    if c.degree > 0:
        f = f.map_coeffs(lambda x: x // c, QQt)
        g = g.map_coeffs(lambda x: x // c, QQt)
    lc = g.lc.lc
    if lc != 1:
        f, g = f * (1 / lc), g * (1 / lc)
    d = max(f.degree, g.degree)
    if d < 1:
        raise ConstantMapError("map is constant after cancellation")
    if not homogeneous_resultant(f, g, d):
        raise NotAMorphismError("homogeneous pair has zero resultant")
    return RationalMap(f, g, d)


def _apply(phi, x, y):
    """[F(x,y) : G(x,y)] for polynomial or residue coordinates."""
    return phi.f.hom(x, y, phi.d), phi.g.hom(x, y, phi.d)


@dataclass
class IterationContext:
    """Per-computation cache of orbits and iterated forms, with a degree cap."""

    degree_cap: int = DEFAULT_DEGREE_CAP
    _orbits: dict = field(default_factory=dict, repr=False)
    _forms: dict = field(default_factory=dict, repr=False)

    def check(self, d, j):
        if d ** j > self.degree_cap:
            raise ResourceLimitError(f"{d}^{j} exceeds the degree cap {self.degree_cap}")

    def orbit(self, phi, alpha, j):
        """[alpha, phi(alpha), ..., phi^j(alpha)]."""
        alpha = ProjPointK.of(alpha)
        seq = self._orbits.setdefault((phi, alpha), [alpha])
        if len(seq) <= j:
            self.check(phi.d, j)
            while len(seq) <= j:
                x, y = _apply(phi, *seq[-1])
                seq.append(ProjPointK(x, y))
        return seq[: j + 1]

    def forms(self, phi, n):
        """Affine parts (F_n(z,1), G_n(z,1)) of the n-th iterate, formal degree d^n."""
        seq = self._forms.get(phi)
        if seq is None:
            z = Poly.gen(QQt, "z")
            seq = self._forms[phi] = [(z, Poly.const(1, QQt, "z"))]
        if len(seq) <= n:
            self.check(phi.d, n)
            while len(seq) <= n:
                x, y = seq[-1]
                fn, gn = phi.f.hom(x, y, phi.d), phi.g.hom(x, y, phi.d)
                c = poly_gcd(content(fn), content(gn)) if fn else content(gn)
                if c.degree > 0:
                    fn = fn.map_coeffs(lambda v: v // c, QQt)
                    gn = gn.map_coeffs(lambda v: v // c, QQt)
                seq.append((fn, gn))
        return seq[n]


def iterate_point(phi, alpha, j, ctx=None):
    ctx = ctx or IterationContext()
    return ctx.orbit(phi, alpha, j)[j]


def bad_reduction_divisor(phi):
    res = phi.homogeneous_resultant()
    finite = squarefree_part(res) if res.degree > 0 else _T_ONE
    at_inf = res.degree < 2 * phi.d * phi.coefficient_degree()
    return PlaceSet(finite, at_inf)


def reduced_coefficients(phi, place):
    """Residue-field coefficient lists of f and g at a place (1/t-normalized at infinity)."""
    if place.is_infinity:
        top = phi.coefficient_degree()
        return ([c.coeff(top) for c in phi.f.coeffs], [c.coeff(top) for c in phi.g.coeffs])
    fld = place.residue_field
    if fld is QQ:
        c0 = place.rational_value
        return [c(c0) for c in phi.f.coeffs], [c(c0) for c in phi.g.coeffs]
    return [fld.convert(c) for c in phi.f.coeffs], [fld.convert(c) for c in phi.g.coeffs]


class ReducedMap:
    """The map over the residue field of a place of good reduction."""

    def __init__(self, phi, place):
        if place in bad_reduction_divisor(phi):
            raise PreconditionError(f"{place} is a place of bad reduction")
        self.place = place
        self.field = place.residue_field
        self.d = phi.d
        self.fc, self.gc = reduced_coefficients(phi, place)

    def _hom(self, cs, x, y):
        acc = self.field.zero
        d = self.d
        for i, c in enumerate(cs):
            if c:
                acc = acc + c * x ** i * y ** (d - i)
        return acc

    def __call__(self, pt):
        x, y = pt.x, pt.y
        return ResidueProjPoint.normalized(self._hom(self.fc, x, y), self._hom(self.gc, x, y), self.field)


def same_reduction(a, b, place):
    return reduce_point(ProjPointK.of(a), place) == reduce_point(ProjPointK.of(b), place)


def portrait_mod_place(phi, alpha, place, bound=DEFAULT_BOUND):
    """Portrait of alpha modulo a good place, or None if no repeat within ``bound`` steps."""
    rmap = ReducedMap(phi, place)
    pt = reduce_point(ProjPointK.of(alpha), place)
    seen = {}
    for j in range(bound + 1):
        if pt in seen:
            return Portrait(seen[pt], j - seen[pt])
        seen[pt] = j
        if j < bound:
            pt = rmap(pt)
    return None


def global_portrait(phi, alpha, limit, ctx=None):
    """Exact portrait of alpha over K if it repeats within ``limit`` iterates."""
    ctx = ctx or IterationContext()
    seen = {}
    for j, pt in enumerate(ctx.orbit(phi, alpha, limit)):
        if pt in seen:
            return Portrait(seen[pt], j - seen[pt])
        seen[pt] = j
    return None
