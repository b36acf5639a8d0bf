"""Choose coefficients of normal-form polynomials so that given constant points
get given portraits.

Degree 2 runs the witness engine for z^2 + t, reading t as the unknown a0.
Degree 3 (z^3 + a z + b, two points) forms each point's stripped portrait
condition as a polynomial in b over QQ(a), eliminates b with a resultant and
tries the resulting candidates in a fixed order, rational ones first.  Every
emitted answer is re-verified in exact number-field arithmetic, where an
algebraic candidate stands for every root of its defining polynomial; a
modulus found to be reducible during verification is split and both halves
are retried.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .dynatomic import prime_factors
from .dynmap import DEFAULT_DEGREE_CAP, IterationContext, PlaceSet, Portrait, new_map
from .errors import PreconditionError, ResourceLimitError, ZeroDivisorFound
from .exactalg import (
    QQ,
    QQt,
    Poly,
    PolynomialRing,
    QElem,
    QuotientField,
    _tdeg,
    exquo,
    poly_gcd,
    rational_roots,
    resultant,
    squarefree_part,
    strip_common_roots,
)
from .witness import Status, _sort_key, find_witness

ELIMINATION_CAP = 1500

A_RING = PolynomialRing("a")


@dataclass(frozen=True)
class AlgebraicValue:
    """Any root of ``minpoly``; coefficients may involve earlier unknowns."""

    minpoly: Poly

    def __str__(self):
        return f"root of {self.minpoly}"


@dataclass(frozen=True)
class CoefficientWitness:
    assignment: dict
    verified: bool
    candidates: tuple = ()

    def as_dict(self):
        return {
            "status": "Realizable",
            "assignment": {k: str(v) for k, v in self.assignment.items()},
            "verified": self.verified,
        }


@dataclass(frozen=True)
class NotRealizable:
    reason: str
    # True when the answer is a proof; False for "nothing found within bounds"
    proven: bool = True
    candidates: tuple = ()

    def as_dict(self):
        return {"status": "NotRealizable" if self.proven else "NotRealizableAtCap", "reason": self.reason}


@dataclass(frozen=True)
class Capped:
    reason: str

    def as_dict(self):
        return {"status": "Capped", "reason": self.reason}


def _portrait(t):
    return t if isinstance(t, Portrait) else Portrait(*t)


# --- exact verification -----------------------------------------------------


def _is_zero(x, fld):
    if fld is QQ:
        return x == 0
    return fld.zero_status(x)


def verify_polynomial_portrait(step, start, target, fld):
    """Check that ``start`` has portrait ``target`` under ``step`` over ``fld``.

    Equalities must hold at every root of the field's modulus and the
    minimality inequalities at every root as well.  A mixed answer raises
    ZeroDivisorFound from the field concerned.
    """
    m, n = target
    vals = [start]
    for _ in range(m + n):
        vals.append(step(vals[-1]))
    if not _is_zero(vals[m + n] - vals[m], fld):
        return False
    for ell in prime_factors(n):
        if _is_zero(vals[m + n // ell] - vals[m], fld):
            return False
    if m >= 1 and _is_zero(vals[m - 1 + n] - vals[m - 1], fld):
        return False
    return True


# --- degree 2 ---------------------------------------------------------------


def quadratic_family():
    t = QQt.convert(Poly.gen(QQ, "t"))
    return new_map(Poly.gen(QQt, "z") ** 2 + t)


def _rename(p, var):
    return Poly._make(list(p.coeffs), p.dom, var)


def realize_single(c, target, d=2, degree_cap=DEFAULT_DEGREE_CAP):
    if d != 2:
        raise PreconditionError("realize_single handles d = 2 only")
    c = Fraction(c)
    target = _portrait(target)
    rep = find_witness(quadratic_family(), c, target, PlaceSet(None, True), IterationContext(degree_cap))
    if rep.status is Status.CAPPED:
        return Capped(rep.note)
    if rep.status is Status.NOT_REALIZABLE:
        return NotRealizable(f"every place is excluded for portrait {target}", proven=True)
    if rep.rational_witnesses:
        a0 = rep.rational_witnesses[0]
        ok = verify_polynomial_portrait(lambda x: x * x + a0, c, target, QQ)
        return CoefficientWitness({"a0": a0}, ok)
    minpoly = _rename(rep.divisor, "a")
    pending = deque([minpoly])
    verified = []
    while pending:
        mod = pending.popleft()
        fld = QuotientField(mod)
        a0 = fld.gen
        try:
            ok = verify_polynomial_portrait(lambda x: x * x + a0, fld.convert(c), target, fld)
        except ZeroDivisorFound as exc:
            pending.extend([exc.factor, exquo(mod, exc.factor)])
            continue
        verified.append(ok)
    return CoefficientWitness({"a0": AlgebraicValue(minpoly)}, all(verified))


# --- degree 3 ---------------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    """(a, b) with a a root of ``a_min`` (over QQ) and b described by ``b``:

    ``("elem", p)``  -- b = p(a), p a polynomial over QQ in a
    ``("min", q)``   -- b is a root of q, a polynomial in b with QQ[a] coefficients
    """

    a_min: Poly
    b: tuple

    @property
    def rational(self):
        if self.a_min.degree != 1:
            return None
        a0 = -self.a_min.coeff(0)
        kind, p = self.b
        if kind == "elem":
            return (a0, p(a0))
        if p.degree == 1:
            c0, c1 = p.coeff(0)(a0), p.coeff(1)(a0)
            return (a0, -c0 / c1)
        return None

    def assignment(self):
        r = self.rational
        if r is not None:
            return {"a": r[0], "b": r[1]}
        a = -self.a_min.coeff(0) if self.a_min.degree == 1 else AlgebraicValue(self.a_min)
        kind, p = self.b
        if kind == "elem":
            b = p(a) if isinstance(a, Fraction) else p
        else:
            b = AlgebraicValue(p.map_coeffs(lambda c: c(a), QQ) if isinstance(a, Fraction) else p)
        return {"a": a, "b": b}


def _a_field(a_min):
    if a_min.degree == 1:
        return QQ, -a_min.coeff(0)
    fld = QuotientField(a_min)
    return fld, fld.gen


def _into(fld, p, a_val):
    """Polynomial in a (over QQ) as an element of the field of a."""
    if fld is QQ:
        return p(a_val)
    return fld.convert(p)


def _to_a_poly(x):
    if isinstance(x, QElem):
        return x.value
    return Poly.const(x, QQ, "a")


def _verify_candidate(cand, points, targets):
    kfld, a_val = _a_field(cand.a_min)
    kind, p = cand.b
    if kind == "elem":
        lfld, b_val = kfld, _into(kfld, p, a_val)
    else:
        bmin = Poly([_into(kfld, c, a_val) for c in p.coeffs], kfld, "b")
        if bmin.degree == 1:
            lfld, b_val = kfld, -bmin.coeff(0) / bmin.coeff(1)
        else:
            lfld = QuotientField(bmin)
            b_val = lfld.gen
    if lfld is not QQ:
        a_val = lfld.convert(a_val)

    def step(x):
        return x * x * x + a_val * x + b_val

    for c, tgt in zip(points, targets):
        start = Fraction(c) if lfld is QQ else lfld.convert(Fraction(c))
        if not verify_polynomial_portrait(step, start, tgt, lfld):
            return False, kfld, lfld
    return True, kfld, lfld


def _split(cand, exc, kfld, lfld):
    if kfld is not QQ and exc.field == kfld:
        f1 = exc.factor
        return [Candidate(f1, cand.b), Candidate(exquo(cand.a_min, f1), cand.b)]
    bmin_k = lfld.modulus
    f1 = exc.factor.monic()
    f2 = exquo(bmin_k, f1).monic()
    back = [Poly([_to_a_poly(c) for c in f.coeffs], A_RING, "b") for f in (f1, f2)]
    return [Candidate(cand.a_min, ("min", q)) for q in back]


def verify_candidates(cands, points, targets):
    """First verified candidate (after splitting reducible moduli), or None."""
    pending = deque(cands)
    while pending:
        cand = pending.popleft()
        kfld = lfld = None
        try:
            kfld, _ = _a_field(cand.a_min)
            ok, kfld, lfld = _verify_candidate(cand, points, targets)
        except ZeroDivisorFound as exc:
            if lfld is None:
                lfld = _last_tower(cand, kfld)
            for piece in reversed(_split(cand, exc, kfld, lfld)):
                pending.appendleft(piece)
            continue
        if ok:
            return cand
    return None


def _last_tower(cand, kfld):
    kind, p = cand.b
    if kind == "elem" or kfld is QQ and p.degree <= 1:
        return kfld
    a_val = kfld.gen if kfld is not QQ else -cand.a_min.coeff(0)
    bmin = Poly([_into(kfld, c, a_val) for c in p.coeffs], kfld, "b")
    return QuotientField(bmin) if bmin.degree > 1 else kfld


def cubic_orbit(c, steps):
    """f^j(c) for f = z^3 + a z + b, as polynomials in b over QQ[a]."""
    a = A_RING.convert(Poly.gen(QQ, "a"))
    b = Poly.gen(A_RING, "b")
    vals = [Poly.const(Fraction(c), A_RING, "b")]
    for _ in range(steps):
        x = vals[-1]
        vals.append(x * x * x + x * a + b)
    return vals


def portrait_condition(c, target):
    """Squarefree condition in b over QQ(a), exclusions stripped, content dropped."""
    m, n = target
    vals = cubic_orbit(c, m + n)
    cond = squarefree_part(vals[m + n] - vals[m])
    for ell in prime_factors(n):
        cond = strip_common_roots(cond, vals[m + n // ell] - vals[m])
    if m >= 1:
        cond = strip_common_roots(cond, vals[m - 1 + n] - vals[m - 1])
    return cond


def _specialize(p, a0):
    return Poly._make([c(a0) for c in p.coeffs], QQ, "b")


def _rational_candidates(a0, g1, g2):
    g = poly_gcd(_specialize(g1, a0), _specialize(g2, a0))
    out = []
    if g.degree < 1:
        return out
    a_min = Poly([-a0, 1], QQ, "a")
    roots = sorted(rational_roots(g), key=_sort_key)
    for b0 in roots:
        out.append(Candidate(a_min, ("elem", Poly.const(b0, QQ, "a"))))
        g = g // Poly([-b0, 1], QQ, "b")
    if g.degree >= 1:
        out.append(Candidate(a_min, ("min", Poly([A_RING.convert(c) for c in g.coeffs], A_RING, "b"))))
    return out


def _algebraic_candidates(rest, g1, g2):
    """Candidates over QQ[a]/(rest), splitting the modulus as zero divisors show up."""
    out = []
    pending = deque([rest])
    while pending:
        mod = pending.popleft()
        fld = QuotientField(mod)
        try:
            h1 = Poly([fld.convert(c) for c in g1.coeffs], fld, "b")
            h2 = Poly([fld.convert(c) for c in g2.coeffs], fld, "b")
            h = poly_gcd(h1, h2)
        except ZeroDivisorFound as exc:
            pending.extend([exc.factor, exquo(mod, exc.factor)])
            continue
        if h.degree < 1:
            continue
        if h.degree == 1:
            out.append(Candidate(mod, ("elem", (-h.coeff(0)).value)))
        else:
            out.append(Candidate(mod, ("min", Poly([_to_a_poly(c) for c in h.coeffs], A_RING, "b"))))
    return out


def _small_values(count):
    yield Fraction(0)
    for k in range(1, count):
        yield Fraction(k)
        yield Fraction(-k)


def cubic_candidates(g1, g2, fallback_values=12):
    """Ordered (a, b) candidates from the elimination of b."""
    bound = g1.degree * _tdeg(g2) + g2.degree * _tdeg(g1)
    if bound > ELIMINATION_CAP:
        raise ResourceLimitError(f"elimination degree bound {bound} exceeds {ELIMINATION_CAP}")
    res = resultant(g1, g2)
    if not res:
        common = poly_gcd(g1, g2)
        out = []
        for a0 in _small_values(fallback_values):
            out.extend(_rational_candidates(a0, common, common))
        return out
    if res.degree < 1:
        return []
    roots = sorted(rational_roots(res), key=_sort_key)
    out = []
    for a0 in roots:
        out.extend(_rational_candidates(a0, g1, g2))
    rest = squarefree_part(res)
    for a0 in roots:
        rest = rest // Poly([-a0, 1], QQ, "a")
    if rest.degree >= 1:
        out.extend(_algebraic_candidates(rest.monic(), g1, g2))
    return out


def realize_pair_cubic(c1, c2, t1, t2, degree_cap=DEFAULT_DEGREE_CAP):
    c1, c2 = Fraction(c1), Fraction(c2)
    if c1 == c2:
        raise PreconditionError("the two points must be distinct")
    t1, t2 = _portrait(t1), _portrait(t2)
    for t in (t1, t2):
        if 3 ** (t.m + t.n) > degree_cap:
            return Capped(f"3^{t.m + t.n} exceeds the degree cap {degree_cap}")
    g1 = portrait_condition(c1, t1)
    g2 = portrait_condition(c2, t2)
    if g1.degree < 1 or g2.degree < 1:
        return NotRealizable("a portrait condition is empty after stripping", proven=False)
    try:
        cands = tuple(cubic_candidates(g1, g2))
    except ResourceLimitError as exc:
        return Capped(str(exc))
    found = verify_candidates(cands, (c1, c2), (t1, t2))
    if found is None:
        return NotRealizable("no candidate from the elimination passed verification", proven=False, candidates=cands)
    return CoefficientWitness(found.assignment(), True, cands)


def realize_chain(d, points, targets, degree_cap=DEFAULT_DEGREE_CAP):
    points = [Fraction(p) for p in points]
    targets = [_portrait(t) for t in targets]
    if d < 2:
        raise PreconditionError("degree must be at least 2")
    if len(points) != d - 1 or len(targets) != d - 1:
        raise PreconditionError(f"degree {d} needs exactly {d - 1} points and portraits")
    if len(set(points)) != len(points):
        raise PreconditionError("points must be distinct")
    if d == 2:
        return realize_single(points[0], targets[0], 2, degree_cap)
    if d == 3:
        return realize_pair_cubic(points[0], points[1], targets[0], targets[1], degree_cap)
    return Capped(f"degree {d} is beyond the supported tower depth")


__all__ = [
    "AlgebraicValue",
    "Candidate",
    "Capped",
    "CoefficientWitness",
    "NotRealizable",
    "cubic_candidates",
    "portrait_condition",
    "realize_chain",
    "realize_pair_cubic",
    "realize_single",
    "verify_polynomial_portrait",
]
