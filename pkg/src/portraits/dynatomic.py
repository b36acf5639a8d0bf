"""Exact-period divisors, totally ramified points and the structural
obstruction sets built from them.

Divisors over K = QQ(t) are stored as primitive polynomials in z with
coefficients in QQ[t] (leading t-coefficient monic); a separate flag records
whether the point at infinity belongs to the divisor.
"""

from dataclasses import dataclass
from enum import Enum

from .dynmap import IterationContext, ProjPointK, RationalMap
from .errors import PreconditionError
from .exactalg import (
    QQ,
    QQt,
    Poly,
    PolynomialRing,
    RatFunc,
    RationalFunctionField,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
    strip_common_roots,
)


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _one_z():
    return Poly.const(1, QQt, "z")


@dataclass(frozen=True)
class ExactPeriodDivisor:
    divisor: Poly
    includes_infinity: bool

    @property
    def point_count(self):
        return max(self.divisor.degree, 0) + int(self.includes_infinity)


def fixed_form(phi, n, ctx):
    """Affine part of X*G_n - Y*F_n; formal degree d^n + 1."""
    fn, gn = ctx.forms(phi, n)
    return Poly.gen(QQt, "z") * gn - fn


def periodic_numerator(phi, n, ctx=None):
    """Squarefree part of the numerator of phi^n(z) - z."""
    ctx = ctx or IterationContext()
    return squarefree_part(fixed_form(phi, n, ctx))


def _infinity_exact_period(phi, n, ctx):
    orbit = ctx.orbit(phi, ProjPointK.infinity(), n)
    if not orbit[n].is_infinity:
        return False
    return all(not orbit[k].is_infinity for k in _divisors(n) if k < n)


def exact_period_divisor(phi, n, ctx=None):
    if phi.d < 2:
        raise PreconditionError("dynamical operations need degree at least 2")
    ctx = ctx or IterationContext()
    ctx.check(phi.d, n)
    div = periodic_numerator(phi, n, ctx)
    for k in _divisors(n):
        if k < n:
            div = strip_common_roots(div, periodic_numerator(phi, k, ctx))
    return ExactPeriodDivisor(div, _infinity_exact_period(phi, n, ctx))


@dataclass(frozen=True)
class RamificationProfile:
    factors: tuple
    infinity: bool

    @property
    def product(self):
        out = _one_z()
        for f in self.factors:
            out = out * f
        return out

    @property
    def count(self):
        return sum(f.degree for f in self.factors) + int(self.infinity)


def wronskian(phi):
    """f'g - fg', the affine part of a form of degree 2d - 2."""
    f, g = phi.f, phi.g
    return f.derivative() * g - f * g.derivative()


def totally_ramified_points(phi):
    d = phi.d
    if d < 2:
        raise PreconditionError("dynamical operations need degree at least 2")
    w = wronskian(phi)
    factors = tuple(p for p, k in squarefree_decomposition(w) if k == d - 1 and p.degree > 0)
    at_inf = 2 * d - 2 - w.degree == d - 1
    prof = RamificationProfile(factors, at_inf)
    if prof.count > 2:
        raise AssertionError("more than two totally ramified points")
    return prof


def _covers(divisor, ram):
    """Every root of the (squarefree) divisor is a root of ram."""
    if divisor.degree <= 0:
        return True
    return strip_common_roots(divisor, ram).degree <= 0


def x_set(phi, bound, ctx=None):
    ctx = ctx or IterationContext()
    prof = totally_ramified_points(phi)
    ram = prof.product
    out = set()
    for n in range(1, bound + 1):
        epd = exact_period_divisor(phi, n, ctx)
        if _covers(epd.divisor, ram) and (prof.infinity or not epd.includes_infinity):
            out.add(n)
    return out


def is_totally_ramified_point(prof, point):
    point = ProjPointK.of(point)
    if point.is_infinity:
        return prof.infinity
    for f in prof.factors:
        if not f.hom(point.x, point.y):
            return True
    return False


def y_set(phi, alpha, bound, ctx=None):
    ctx = ctx or IterationContext()
    prof = totally_ramified_points(phi)
    orbit = ctx.orbit(phi, alpha, bound - 1) if bound >= 1 else []
    return {m for m in range(1, bound + 1) if is_totally_ramified_point(prof, orbit[m - 1])}


def is_isotrivial_normal_form(f):
    """True iff the normal-form polynomial f has constant coefficients."""
    if isinstance(f, RationalMap):
        if not f.is_polynomial():
            raise PreconditionError("not a polynomial map")
        f = f.f * (1 / f.g.lc.lc)
    if isinstance(f.dom, PolynomialRing):
        cs = [RatFunc(c) for c in f.coeffs]
    elif isinstance(f.dom, RationalFunctionField):
        cs = list(f.coeffs)
    else:
        cs = [RatFunc(Poly.const(c, QQ, "t")) for c in f.coeffs]
    d = len(cs) - 1
    if d < 2 or cs[-1] != 1 or cs[d - 1]:
        raise PreconditionError("expected a monic polynomial of degree >= 2 with no z^(d-1) term")
    return all(c.is_constant() for c in cs)


def is_normal_form(phi):
    if not phi.is_polynomial() or phi.d < 2:
        return False
    f = phi.f
    return f.lc.degree == 0 and not f.coeff(phi.d - 1)


def swap_variables(p):
    """Bivariate p in z over QQ[t] -> same polynomial in t over QQ[z]."""
    tdeg = max((c.degree for c in p.coeffs if c), default=0)
    ring = PolynomialRing("z")
    rows = []
    for j in range(tdeg + 1):
        rows.append(Poly._make([c.coeff(j) for c in p.coeffs], QQ, "z"))
    return Poly(rows, ring, "t")


def cross_form(phi, m, n, ctx):
    """Affine F_{m+n} G_m - F_m G_{m+n} over QQ[t][z]."""
    fa, ga = ctx.forms(phi, m + n)
    fb, gb = ctx.forms(phi, m)
    return fa * gb - fb * ga


def portrait_divisor(phi, m, n, ctx=None):
    """Squarefree divisor in z of points with portrait (m, n) over K."""
    ctx = ctx or IterationContext()
    ctx.check(phi.d, m + n)
    div = squarefree_part(cross_form(phi, m, n, ctx))
    for ell in prime_factors(n):
        div = strip_common_roots(div, cross_form(phi, m, n // ell, ctx))
    if m >= 1:
        div = strip_common_roots(div, cross_form(phi, m - 1, n, ctx))
    return div


def has_nonconstant_portrait_point(phi, m, n, ctx=None):
    div = portrait_divisor(phi, m, n, ctx)
    if div.degree <= 0:
        return False
    sw = swap_variables(div)
    c = None
    for slice_ in sw.coeffs:
        if slice_:
            c = slice_.monic() if c is None else poly_gcd(c, slice_)
    return div.degree > c.degree


class PowerMapType(Enum):
    POSITIVE = "z^d"
    NEGATIVE = "z^-d"
    NEITHER = "neither"

    def __str__(self):
        return self.value


def detect_power_map_conjugacy(phi):
    prof = totally_ramified_points(phi)
    if prof.count != 2:
        return PowerMapType.NEITHER
    d = phi.d
    ram = prof.product
    fix = fixed_form(phi, 1, IterationContext())
    inf_fixed = fix.degree < d + 1
    if _covers(ram, fix) and (inf_fixed or not prof.infinity):
        return PowerMapType.POSITIVE
    # T^h(F, G) vanishes on T iff phi(T) is inside T
    k = ram.degree + int(prof.infinity)
    image = ram.hom(phi.f, phi.g, k)
    invariant = _covers(ram, image) and (not prof.infinity or image.degree < k * d)
    no_fixed = strip_common_roots(ram, fix) == ram and not (prof.infinity and inf_fixed)
    if invariant and no_fixed:
        return PowerMapType.NEGATIVE
    return PowerMapType.NEITHER


__all__ = [
    "ExactPeriodDivisor",
    "PowerMapType",
    "RamificationProfile",
    "detect_power_map_conjugacy",
    "exact_period_divisor",
    "has_nonconstant_portrait_point",
    "is_isotrivial_normal_form",
    "is_normal_form",
    "periodic_numerator",
    "portrait_divisor",
    "prime_factors",
    "totally_ramified_points",
    "x_set",
    "y_set",
]
