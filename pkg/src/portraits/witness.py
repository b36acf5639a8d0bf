"""Places of QQ(t) at which a starting point has a prescribed portrait.

The divisor for (m, n) is the squarefree part of A_{m+n} B_m - A_m B_{m+n}
with every root removed that is shared with the exclusion polynomials: wrong
period (m, n/l) for primes l | n, too-small preperiod (m-1, n), bad reduction
and the user's set S.  No factorization is needed; the divisor's irreducible
factors are exactly the realizing finite places.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .dynatomic import has_nonconstant_portrait_point, is_isotrivial_normal_form, is_normal_form, prime_factors, x_set, y_set
from .dynmap import (
    IterationContext,
    PlaceSet,
    Portrait,
    ProjPointK,
    bad_reduction_divisor,
    global_portrait,
    portrait_mod_place,
)
from .errors import PreconditionError, ResourceLimitError
from .exactalg import QQ, Poly, rational_roots, squarefree_part, strip_common_roots
from .places import Place

_ONE = Poly.const(1, QQ, "t")
_ZERO = Poly((), QQ, "t")


class Status(Enum):
    REALIZABLE = "Realizable"
    NOT_REALIZABLE = "NotRealizableByFinitePlaces"
    CAPPED = "Capped"

    def __str__(self):
        return self.value


def _sort_key(c):
    return (max(abs(c.numerator), c.denominator), c.denominator, c < 0, abs(c))


@dataclass(frozen=True)
class WitnessReport:
    requested: Portrait
    divisor: Poly
    rational_witnesses: tuple = ()
    infinity_is_witness: bool = False
    status: Status = Status.NOT_REALIZABLE
    # set when the starting point is itself preperiodic with the requested
    # portrait: every place is a witness except the roots of ``excluded``
    cofinite: bool = False
    excluded: Poly = _ONE
    note: str = ""

    def sample_witness(self):
        if self.rational_witnesses:
            return str(self.rational_witnesses[0])
        if self.infinity_is_witness:
            return "inf"
        if self.status is Status.REALIZABLE and self.divisor.degree >= 1:
            return f"root of {self.divisor}"
        return ""

    def as_dict(self):
        out = {
            "requested": [self.requested.m, self.requested.n],
            "divisor": str(self.divisor),
            "rational_witnesses": [str(c) for c in self.rational_witnesses],
            "infinity_is_witness": self.infinity_is_witness,
            "status": str(self.status),
        }
        if self.cofinite:
            out["cofinite"] = True
            out["excluded"] = str(self.excluded)
        if self.note:
            out["note"] = self.note
        return out


def cross_difference(phi, alpha, m, n, ctx=None):
    """Monic squarefree A_{m+n} B_m - A_m B_{m+n}; zero if phi^{m+n}(alpha) = phi^m(alpha)."""
    ctx = ctx or IterationContext()
    orbit = ctx.orbit(phi, alpha, m + n)
    (am, bm), (amn, bmn) = orbit[m], orbit[m + n]
    h = amn * bm - am * bmn
    return squarefree_part(h) if h else h


def exclusion_polynomials(phi, alpha, m, n, S, ctx):
    out = [cross_difference(phi, alpha, m, n // ell, ctx) for ell in prime_factors(n)]
    if m >= 1:
        out.append(cross_difference(phi, alpha, m - 1, n, ctx))
    out.append(bad_reduction_divisor(phi).finite_part)
    out.append(S.finite_part)
    return out


def _infinity_check(phi, alpha, target, S):
    inf = Place.infinity()
    if inf in S or inf in bad_reduction_divisor(phi):
        return False
    return portrait_mod_place(phi, alpha, inf, target.m + target.n + 1) == target


def _verified(phi, alpha, c, target):
    return portrait_mod_place(phi, alpha, Place.at(c), target.m + target.n + 1) == target


def find_witness(phi, alpha, target, S=None, ctx=None, cofinite_samples=8):
    target = target if isinstance(target, Portrait) else Portrait(*target)
    S = S or PlaceSet()
    ctx = ctx or IterationContext()
    alpha = ProjPointK.of(alpha)
    m, n = target
    try:
        h = cross_difference(phi, alpha, m, n, ctx)
        exclusions = exclusion_polynomials(phi, alpha, m, n, S, ctx)
    except ResourceLimitError as exc:
        return WitnessReport(target, _ONE, status=Status.CAPPED, note=str(exc))
    if not h:
        return _global_branch(phi, alpha, target, S, exclusions, ctx, cofinite_samples)
    div = h
    for x in exclusions:
        div = strip_common_roots(div, x)
    witnesses = tuple(sorted((c for c in rational_roots(div) if _verified(phi, alpha, c, target)), key=_sort_key))
    at_inf = _infinity_check(phi, alpha, target, S)
    ok = div.degree >= 1 or at_inf
    return WitnessReport(
        target, div, witnesses, at_inf, Status.REALIZABLE if ok else Status.NOT_REALIZABLE
    )


def _global_branch(phi, alpha, target, S, exclusions, ctx, samples):
    m, n = target
    actual = global_portrait(phi, alpha, m + n, ctx)
    if actual != target:
        return WitnessReport(target, _ONE, note=f"starting point is preperiodic with portrait {actual}")
    excluded = _ONE
    for x in exclusions:
        excluded = excluded * x
    excluded = squarefree_part(excluded)
    found = []
    k = 0
    while len(found) < samples and k < 4 * samples + 8:
        c = Fraction((k + 1) // 2 * (1 if k % 2 else -1))
        k += 1
        if excluded(c) and _verified(phi, alpha, c, target):
            found.append(c)
    at_inf = _infinity_check(phi, alpha, target, S)
    return WitnessReport(
        target, _ZERO, tuple(sorted(found, key=_sort_key)), at_inf, Status.REALIZABLE,
        cofinite=True, excluded=excluded,
    )


@dataclass(frozen=True)
class GridCell:
    report: WitnessReport
    in_y_set: bool
    in_x_set: bool

    @property
    def annotation(self):
        notes = []
        if self.in_y_set:
            notes.append("m in Y(phi,alpha)")
        if self.in_x_set:
            notes.append("n in X(phi)")
        return "; ".join(notes)


@dataclass(frozen=True)
class GridReport:
    max_m: int
    max_n: int
    cells: dict = field(default_factory=dict)

    def rows(self):
        for m in range(self.max_m + 1):
            for n in range(1, self.max_n + 1):
                yield m, n, self.cells[(m, n)]

    def csv_rows(self):
        yield ["m", "n", "status", "witness"]
        for m, n, cell in self.rows():
            yield [m, n, str(cell.report.status), cell.report.sample_witness()]


def portrait_grid(phi, alpha, max_m, max_n, S=None, ctx=None):
    """find_witness over m in [0, max_m], n in [1, max_n], row-major."""
    ctx = ctx or IterationContext()
    try:
        ys = y_set(phi, alpha, max_m, ctx)
    except ResourceLimitError:
        ys = set()
    try:
        xs = x_set(phi, max_n, ctx)
    except ResourceLimitError:
        xs = set()
    cells = {}
    for m in range(max_m + 1):
        for n in range(1, max_n + 1):
            rep = find_witness(phi, alpha, Portrait(m, n), S, ctx)
            cells[(m, n)] = GridCell(rep, m in ys, n in xs)
    return GridReport(max_m, max_n, cells)


def starting_point_sweep(phi, target, S=None, candidates=range(-3, 4), ctx=None):
    """find_witness for each constant starting point; returns [(c, report)]."""
    target = target if isinstance(target, Portrait) else Portrait(*target)
    ctx = ctx or IterationContext()
    if not has_nonconstant_portrait_point(phi, target.m, target.n, ctx):
        raise PreconditionError(
            f"every point of portrait {target} is constant, so constant starting points "
            "cannot be expected to realize it"
        )
    if is_normal_form(phi) and is_isotrivial_normal_form(phi):
        raise PreconditionError("map is isotrivial")
    return [(Fraction(c), find_witness(phi, Fraction(c), target, S, ctx)) for c in candidates]
