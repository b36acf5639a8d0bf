"""Exact univariate polynomial arithmetic over the tower QQ, QQ[t], QQ(t), QQ[t]/(q).

Polynomials are dense, lowest degree first, and immutable.  A polynomial
carries its coefficient domain:

* ``QQ``                      -- rationals, elements are ``fractions.Fraction``
* ``PolynomialRing(var)``     -- QQ[var], elements are ``Poly`` over ``QQ``
* ``RationalFunctionField``   -- QQ(t), elements are ``RatFunc``
* ``QuotientField(modulus)``  -- base[x]/(modulus), elements are ``QElem``

Polynomials over QQ[t] are the "primitive bivariate" representation of
polynomials over QQ(t): gcds over that ring come from gcds at t = c
interpolated back (primitive PRS as the fallback) and are normalized to be
primitive with monic leading coefficient.  Nothing in this module uses floating point.

Resultant sign convention: ``resultant(a, b)`` is the determinant of the
Sylvester matrix with the rows of ``a`` first, i.e.
``lc(a)**deg(b) * prod(b(root) for root of a)``.
"""

from fractions import Fraction
from math import gcd as igcd

from .errors import DegenerateInputError, ZeroDivisorFound

NEG_INF = float("-inf")


class Domain:
    is_field = True
    zero = None
    one = None

    def convert(self, x):
        raise NotImplementedError

    def inv(self, x):
        return self.one / x


class RationalField(Domain):
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        if type(x) is Fraction:
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        if isinstance(x, Fraction):
            return Fraction(x.numerator, x.denominator)
        if isinstance(x, Poly) and x.degree <= 0:
            return self.convert(x.coeff(0))
        raise TypeError(f"cannot convert {x!r} to a rational")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PolynomialRing(Domain):
    """QQ[var], used as the coefficient ring of bivariate polynomials."""

    is_field = False

    def __init__(self, var="t"):
        self.var = var
        self.zero = Poly._make([], QQ, var)
        self.one = Poly._make([QQ.one], QQ, var)

    def convert(self, x):
        if isinstance(x, Poly):
            if x.dom is not QQ:
                raise TypeError("coefficient ring elements must be polynomials over QQ")
            return x if x.var == self.var else Poly._make(list(x.coeffs), QQ, self.var)
        return Poly._make([QQ.convert(x)], QQ, self.var)

    def exquo(self, a, b):
        return exquo(a, b)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.var == self.var

    def __hash__(self):
        return hash(("QQ[]", self.var))

    def __repr__(self):
        return f"QQ[{self.var}]"


class Poly:
    """Dense univariate polynomial over a domain; coefficients lowest first."""

    __slots__ = ("coeffs", "dom", "var")

    def __init__(self, coeffs=(), dom=QQ, var="t"):
        cs = [dom.convert(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.dom = dom
        self.var = var

    @classmethod
    def _make(cls, cs, dom, var):
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(cs)
        obj.dom = dom
        obj.var = var
        return obj

    @classmethod
    def gen(cls, dom=QQ, var="t"):
        return cls._make([dom.zero, dom.one], dom, var)

    @classmethod
    def const(cls, c, dom=QQ, var="t"):
        return cls._make([dom.convert(c)], dom, var)

    def _like(self, cs):
        return Poly._make(cs, self.dom, self.var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.dom.zero

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.dom.zero

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly) and other.dom == self.dom:
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.const(other, self.dom, self.var).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly) and other.dom == self.dom:
            return other
        return Poly._make([self.dom.convert(other)], self.dom, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return self._like(cs)

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not (isinstance(other, Poly) and other.dom == self.dom):
            c = self.dom.convert(other)
            return self._like([x * c for x in self.coeffs]) if c else self._like([])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._like([])
        if self.dom is QQ and len(a) * len(b) > 16:
            return self._like(_qq_mul(a, b))
        zero = self.dom.zero
        res = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                res[i + j] = res[i + j] + x * y
        return self._like(res)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = self._like([self.dom.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self.dom.is_field:
            raise TypeError("divmod needs a field; use exquo over rings")
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return self._like([]), self
        inv = self.dom.inv(other.lc)
        q = [self.dom.zero] * (len(r) - db)
        bc = other.coeffs
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if not c:
                continue
            c = c * inv
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = r[i - db + j] - c * bc[j]
        return self._like(q), self._like(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == self.dom.one:
            return self
        inv = self.dom.inv(lc)
        return self._like([c * inv for c in self.coeffs])

    def derivative(self):
        return self._like([c * i for i, c in enumerate(self.coeffs) if i])

    def __call__(self, x):
        cs = self.coeffs
        if not cs:
            return self.dom.zero
        acc = cs[-1]
        for c in reversed(cs[:-1]):
            acc = acc * x + c
        return acc

    def hom(self, x, y, degree=None):
        """Homogeneous evaluation sum c_i x^i y^(D-i), D = ``degree`` or deg."""
        cs = self.coeffs
        D = len(cs) - 1 if degree is None else degree
        one = x ** 0
        xpow = [one]
        for _ in range(1, len(cs)):
            xpow.append(xpow[-1] * x)
        ypow = [one]
        for _ in range(D):
            ypow.append(ypow[-1] * y)
        acc = one * 0
        for i, c in enumerate(cs):
            if c:
                acc = acc + xpow[i] * ypow[D - i] * c
        return acc

    def map_coeffs(self, fn, dom, var=None):
        return Poly([fn(c) for c in self.coeffs], dom, self.var if var is None else var)

    def shift(self, k):
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return self._like([self.dom.zero] * k + list(self.coeffs))

    def to_str(self, var=None):
        return format_poly(self, var)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!s}, {self.dom!r})"


QQt = PolynomialRing("t")


def _common_denominator_ints(cs):
    den = 1
    for c in cs:
        d = c.denominator
        if d != 1:
            den = den // igcd(den, d) * d
    return [c.numerator * (den // c.denominator) for c in cs], den


def _int_convolve(a, b):
    if len(a) * len(b) > 2000:
        return _kronecker_mul(a, b)
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return res


def _kronecker_mul(a, b):
    bound = max(abs(x) for x in a) * max(abs(y) for y in b) * min(len(a), len(b))
    bits = 2 * bound.bit_length() + 2
    # offset each slot by half the range so negative coefficients pack cleanly
    half = 1 << (bits - 1)
    mask = (1 << bits) - 1

    def pack(cs):
        v = 0
        for c in reversed(cs):
            v = (v << bits) + c
        return v

    prod = pack(a) * pack(b)
    n = len(a) + len(b) - 1
    out = []
    for _ in range(n):
        chunk = prod & mask
        if chunk >= half:
            chunk -= 1 << bits
        out.append(chunk)
        prod = (prod - chunk) >> bits
    return out


def _qq_mul(a, b):
    ai, da = _common_denominator_ints(a)
    bi, db = _common_denominator_ints(b)
    den = da * db
    res = _int_convolve(ai, bi)
    if den == 1:
        return [Fraction(x) for x in res]
    return [Fraction(x, den) for x in res]


def format_poly(p, var=None):
    """Render in the CLI expression grammar, highest degree first."""
    var = p.var if var is None else var
    if not p.coeffs:
        return "0"
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if p.dom is QQ:
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
        else:
            s = str(c)
            neg = False
            single = _single_term(c)
            if single and s.startswith("-"):
                neg, s = True, s[1:]
            if not mono:
                body = s if single else f"({s})"
            elif s == "1":
                body = mono
            else:
                body = f"{s}*{mono}" if single else f"({s})*{mono}"
        terms.append(("-" if neg else "+", body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def _single_term(c):
    if isinstance(c, Poly):
        nz = [x for x in c.coeffs if x]
        return len(nz) == 1 and (c.dom is QQ or _single_term(nz[0]))
    if isinstance(c, QElem):
        return _single_term(c.value)
    return not isinstance(c, RatFunc) or c.den.degree == 0 and _single_term(c.num)


# ---------------------------------------------------------------------------
# Rational functions QQ(t)


class RatFunc:
    """Element num/den of QQ(t) with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var="t"):
        if not isinstance(num, Poly):
            num = Poly.const(num, QQ, var)
        if den is None:
            den = Poly._make([QQ.one], QQ, num.var)
        elif not isinstance(den, Poly):
            den = Poly.const(den, QQ, num.var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = Poly._make([QQ.one], QQ, num.var)
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lc = den.lc
        if lc != 1:
            num = num * (1 / lc)
            den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc._raw(other, Poly._make([QQ.one], QQ, other.var))
        return RatFunc._raw(Poly.const(other, QQ, self.num.var), Poly._make([QQ.one], QQ, self.num.var))

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e):
        if e < 0:
            return RatFunc(self.den ** (-e), self.num ** (-e))
        return RatFunc._raw(self.num ** e, self.den ** e)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num.coeff(0))
        return hash((self.num, self.den))

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    @property
    def height(self):
        return max(self.num.degree, self.den.degree, 0)

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        n = str(self.num)
        if not _single_term(self.num):
            n = f"({n})"
        d = str(self.den)
        return f"{n}/{d}" if _single_term(self.den) else f"{n}/({d})"

    def __repr__(self):
        return f"RatFunc({self})"


class RationalFunctionField(Domain):
    def __init__(self, var="t"):
        self.var = var
        one = Poly._make([QQ.one], QQ, var)
        self.zero = RatFunc._raw(Poly._make([], QQ, var), one)
        self.one = RatFunc._raw(one, one)

    def convert(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            if x.dom is not QQ:
                raise TypeError("cannot convert polynomial over a non-rational domain")
            return RatFunc._raw(x, self.one.den)
        return RatFunc._raw(Poly.const(x, QQ, self.var), self.one.den)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.var == self.var

    def __hash__(self):
        return hash(("QQ()", self.var))

    def __repr__(self):
        return f"QQ({self.var})"


QQ_t = RationalFunctionField("t")


# ---------------------------------------------------------------------------
# Quotient rings base[x]/(modulus); fields when the modulus is irreducible


class QuotientField(Domain):
    """base[x]/(modulus).  Treated as a field; if an inverse does not exist
    because the modulus factors, ``ZeroDivisorFound`` is raised."""

    def __init__(self, modulus):
        if not modulus.dom.is_field:
            raise TypeError("modulus must have coefficients in a field")
        if modulus.degree < 1:
            raise DegenerateInputError("quotient modulus must be nonconstant")
        self.modulus = modulus.monic()
        self.base = modulus.dom
        self.zero = QElem(Poly._make([], self.base, modulus.var), self)
        self.one = QElem(Poly._make([self.base.one], self.base, modulus.var), self)

    @property
    def degree(self):
        return self.modulus.degree

    @property
    def gen(self):
        return self.convert(Poly.gen(self.base, self.modulus.var))

    def convert(self, x):
        if isinstance(x, QElem):
            if x.field is self:
                return x
            if x.field.modulus == self.modulus:
                return QElem(x.value, self)
            if x.field is not self.base:
                raise TypeError("element of an unrelated quotient ring")
        if isinstance(x, Poly) and x.dom == self.base:
            v = x if x.var == self.modulus.var else Poly._make(list(x.coeffs), self.base, self.modulus.var)
            if v.degree >= self.modulus.degree:
                v = v % self.modulus
            return QElem(v, self)
        c = self.base.convert(x)
        return QElem(Poly._make([c], self.base, self.modulus.var), self)

    def zero_status(self, x):
        """True if x vanishes at every root of the modulus, False if at none.

        Raises ZeroDivisorFound when x vanishes at some roots but not others.
        """
        x = self.convert(x)
        if not x.value:
            return True
        g = poly_gcd(x.value, self.modulus)
        if g.degree <= 0:
            return False
        raise ZeroDivisorFound(self, g)

    def __eq__(self, other):
        return isinstance(other, QuotientField) and other.modulus == self.modulus and other.base == self.base

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"{self.base!r}[{self.modulus.var}]/({self.modulus})"


def _lies_over(field, base):
    """True if ``field`` is a proper extension tower on top of ``base``."""
    while isinstance(field, QuotientField):
        field = field.base
        if field is base:
            return True
    return False


class QElem:
    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value
        self.field = field

    def _coerce(self, other):
        if isinstance(other, QElem):
            if other.field is self.field:
                return other
            if _lies_over(other.field, self.field):
                return None
        return self.field.convert(other)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElem(self.value + o.value, self.field)

    __radd__ = __add__

    def __neg__(self):
        return QElem(-self.value, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElem(self.value - o.value, self.field)

    def __rsub__(self, other):
        return QElem(self._coerce(other).value - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        v = self.value * o.value
        if v.degree >= self.field.modulus.degree:
            v = v % self.field.modulus
        return QElem(v, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError("inverse of zero in quotient ring")
        g, s, _ = poly_xgcd(self.value, self.field.modulus)
        if g.degree > 0:
            raise ZeroDivisorFound(self.field, g)
        return QElem(s % self.field.modulus, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        if self.value.degree <= 0:
            return hash(self.value.coeff(0))
        return hash(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"QElem({self.value} mod {self.field.modulus})"


# ---------------------------------------------------------------------------
# gcd / resultant / squarefree machinery


def _is_ring(p):
    return isinstance(p.dom, PolynomialRing)


def normalize(p):
    """Canonical associate: monic over fields, primitive with monic leading
    coefficient over QQ[t]."""
    if not p:
        return p
    if _is_ring(p):
        return primitive_part(p)
    return p.monic()


def content(p):
    """gcd of the QQ[t] coefficients of a bivariate polynomial (monic)."""
    g = None
    for c in p.coeffs:
        if not c:
            continue
        g = c.monic() if g is None else poly_gcd(g, c)
        if g.degree == 0:
            break
    return g if g is not None else p.dom.zero


def primitive_part(p):
    if not p:
        return p
    c = content(p)
    cs = [x // c for x in p.coeffs] if c.degree > 0 else list(p.coeffs)
    lcc = cs[-1].lc
    if lcc != 1:
        inv = 1 / lcc
        cs = [x * inv for x in cs]
    return p._like(cs)


def exquo(a, b):
    """Exact quotient a / b; raises ValueError if b does not divide a."""
    if not b:
        raise ZeroDivisionError("exact division by zero")
    if a.dom.is_field:
        q, r = divmod(a, b)
        if r:
            raise ValueError("inexact polynomial division")
        return q
    r = list(a.coeffs)
    db = b.degree
    if not r:
        return a
    if len(r) - 1 < db:
        raise ValueError("inexact polynomial division")
    lc = b.lc
    q = [a.dom.zero] * (len(r) - db)
    bc = b.coeffs
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        c = exquo(c, lc) if isinstance(c, Poly) else a.dom.exquo(c, lc)
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] = r[i - db + j] - c * bc[j]
    if any(r[:db]):
        raise ValueError("inexact polynomial division")
    return a._like(q)


def prem(a, b):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over a ring."""
    db = b.degree
    r = list(a.coeffs)
    if len(r) - 1 < db:
        return a
    lcb = b.lc
    bc = b.coeffs
    e = len(r) - 1 - db + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lcb for x in r]
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - c * bc[j]
        r.pop()
        while r and not r[-1]:
            r.pop()
        e -= 1
    out = a._like(r)
    if e > 0 and out:
        out = out * (lcb ** e)
    return out


def poly_gcd(a, b):
    """Greatest common divisor, normalized (monic, or primitive over QQ[t])."""
    if not a and not b:
        raise DegenerateInputError("gcd of two zero polynomials")
    if not a:
        return normalize(b)
    if not b:
        return normalize(a)
    if a.dom is QQ:
        return _qq_gcd(a, b)
    if a.dom.is_field:
        while b:
            a, b = b, a % b
        return a.monic()
    return _ring_gcd(a, b)


def poly_xgcd(a, b):
    """(g, s, t) with s*a + t*b = g monic, over a field."""
    if not a and not b:
        raise DegenerateInputError("gcd of two zero polynomials")
    one = a._like([a.dom.one])
    zero = a._like([])
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = a.dom.inv(r0.lc)
    return r0 * inv, s0 * inv, t0 * inv


def _ring_gcd(a, b):
    ca, cb = content(a), content(b)
    c = poly_gcd(ca, cb)
    a, b = primitive_part(a), primitive_part(b)
    g = _eval_gcd(a, b)
    if g is None:
        g = _prs_gcd(a, b)
    return g * c if c.degree > 0 else g


def _specialize(p, x):
    return Poly._make([c(x) for c in p.coeffs], QQ, p.var)


def _eval_gcd(a, b):
    """gcd of primitive a, b in QQ[t][z] from gcds at t = 0, 1, -1, 2, ...

    Images of minimal degree are scaled by gcd(lc a, lc b) and interpolated in
    t; the candidate is accepted only if it divides both inputs exactly.
    Returns None if that check fails.
    """
    one = a._like([a.dom.one])
    if a.degree == 0 or b.degree == 0:
        return one
    gamma = poly_gcd(a.lc, b.lc)
    need = gamma.degree + min(_tdeg(a), _tdeg(b)) + 1
    xs, images = [], []
    deg = min(a.degree, b.degree) + 1
    x = 0
    while len(xs) < need:
        xv = Fraction(x)
        x = -x if x > 0 else -x + 1
        if not (a.lc(xv) and b.lc(xv)):
            continue
        gx = _qq_gcd(_specialize(a, xv), _specialize(b, xv))
        if gx.degree == 0:
            return one
        if gx.degree > deg:
            continue
        if gx.degree < deg:
            deg, xs, images = gx.degree, [], []
        xs.append(xv)
        images.append(gx * gamma(xv))
    cs = [interpolate(xs, [im.coeff(i) for im in images], a.dom.var) for i in range(deg + 1)]
    g = primitive_part(Poly(cs, a.dom, a.var))
    try:
        exquo(a, g)
        exquo(b, g)
    except ValueError:
        return None
    return g


def _prs_gcd(a, b):
    if a.degree < b.degree:
        a, b = b, a
    while b:
        if b.degree == 0:
            a = b._like([a.dom.one])
            break
        r = prem(a, b)
        a, b = b, primitive_part(r)
    g = primitive_part(a)
    if g.degree == 0:
        g = g._like([a.dom.one])
    return g


def _field_resultant(a, b):
    dom = a.dom
    if a.degree == 0:
        return a.lc ** b.degree if b.degree > 0 else dom.one
    if b.degree == 0:
        return b.lc ** a.degree
    res = dom.one
    while b.degree > 0:
        r = a % b
        if not r:
            return dom.zero
        s = b.lc ** (a.degree - r.degree)
        if (a.degree * b.degree) % 2:
            s = -s
        res = res * s
        a, b = b, r
    return res * b.lc ** a.degree


def resultant(a, b):
    """Sylvester resultant of nonzero a, b; an element of the coefficient domain."""
    if not a or not b:
        raise DegenerateInputError("resultant with a zero polynomial")
    if a.dom.is_field:
        return _field_resultant(a, b)
    return _ring_resultant(a, b)


def _tdeg(p):
    return max((c.degree for c in p.coeffs if c), default=0)


def _ring_resultant(a, b):
    ring = a.dom
    da, db = a.degree, b.degree
    if da == 0:
        return a.lc ** db if db > 0 else ring.one
    if db == 0:
        return b.lc ** da
    bound = da * _tdeg(b) + db * _tdeg(a)
    xs, ys = [], []
    x = 0
    while len(xs) < bound + 1:
        xv = Fraction(x)
        if a.lc(xv) and b.lc(xv):
            sa = Poly._make([c(xv) for c in a.coeffs], QQ, a.var)
            sb = Poly._make([c(xv) for c in b.coeffs], QQ, b.var)
            xs.append(xv)
            ys.append(_field_resultant(sa, sb))
        x = -x if x > 0 else -x + 1
    return interpolate(xs, ys, ring.var)


def homogeneous_resultant(f, g, d):
    """Resultant of the degree-d binary forms with affine parts f, g."""
    if not f or not g:
        return f.dom.zero
    df, dg = f.degree, g.degree
    if df < d and dg < d:
        return f.dom.zero
    if df == d:
        return resultant(f, g) * f.lc ** (d - dg)
    r = resultant(g, f) * g.lc ** (d - df)
    return -r if d % 2 else r


def interpolate(xs, ys, var="t"):
    """Newton interpolation over QQ: the polynomial of degree < len(xs)."""
    n = len(xs)
    coef = [QQ.convert(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly._make([coef[-1]] if n else [], QQ, var)
    for i in range(n - 2, -1, -1):
        p = p * Poly._make([-xs[i], QQ.one], QQ, var) + coef[i]
    return p


def squarefree_part(p):
    """Monic (or primitive) polynomial with the same roots, all simple."""
    if not p:
        raise DegenerateInputError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return p._like([p.dom.one])
    g = poly_gcd(p, p.derivative())
    return normalize(exquo(p, g) if g.degree > 0 else p)


def squarefree_decomposition(p):
    """Yun's algorithm: [(factor, multiplicity), ...] with normalized factors."""
    if not p:
        raise DegenerateInputError("squarefree decomposition of the zero polynomial")
    p = normalize(p)
    out = []
    if p.degree <= 0:
        return out
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = exquo(p, a)
    c = exquo(dp, a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if d else normalize(b)
        b = exquo(b, a)
        c = exquo(d, a) if d else d
        d = c - b.derivative()
        if a.degree > 0:
            out.append((normalize(a), i))
        i += 1
    return out


def strip_common_roots(h, x):
    """Remove from h every factor sharing a root with x; result is normalized.

    A zero ``x`` vanishes everywhere, so every root of h is removed.
    """
    if not h:
        raise DegenerateInputError("cannot strip roots of the zero polynomial")
    one = h._like([h.dom.one])
    if not x:
        return one
    if h.degree <= 0:
        return one
    g = poly_gcd(h, x)
    while g.degree > 0:
        h = exquo(h, g)
        g = poly_gcd(h, g)
    return normalize(h) if h.degree > 0 else one


# ---------------------------------------------------------------------------
# modular gcd over QQ


def _int_primitive(p):
    ints, _ = _common_denominator_ints(p.coeffs)
    g = 0
    for c in ints:
        g = igcd(g, c)
        if g == 1:
            break
    if g > 1:
        ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _is_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_BIG_PRIMES = []


def _big_primes():
    i = 0
    while True:
        while i >= len(_BIG_PRIMES):
            n = (_BIG_PRIMES[-1] if _BIG_PRIMES else (1 << 62)) - 1
            while not _is_prime(n):
                n -= 1
            _BIG_PRIMES.append(n)
        yield _BIG_PRIMES[i]
        i += 1


def _small_primes():
    n = 3
    while True:
        if _is_prime(n):
            yield n
        n += 2


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _mod_rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        if c:
            shift = len(a) - 1 - db
            for j in range(db + 1):
                a[shift + j] = (a[shift + j] - c * b[j]) % p
        a.pop()
        _trim(a)
    return a


def _mod_gcd(a, b, p):
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b:
        a, b = b, _mod_rem(a, b, p)
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _int_divides(d, f):
    r = list(f)
    dd = len(d) - 1
    lc = d[-1]
    while len(r) - 1 >= dd and r:
        q, rem = divmod(r[-1], lc)
        if rem:
            return False
        shift = len(r) - 1 - dd
        if q:
            for j in range(dd + 1):
                r[shift + j] -= q * d[j]
        r.pop()
        _trim(r)
    return not r


def _qq_gcd(a, b):
    if a.degree == 0 or b.degree == 0:
        return a._like([QQ.one])
    A, B = _int_primitive(a), _int_primitive(b)
    if len(A) < len(B):
        A, B = B, A
    if len(B) <= 3 and len(A) <= 8:
        x, y = a, b
        while y:
            x, y = y, x % y
        return x.monic()
    lcg = igcd(A[-1], B[-1])
    best = len(B) - 1
    acc = None
    modulus = 1
    prev = None
    for p in _big_primes():
        if A[-1] % p == 0 or B[-1] % p == 0:
            continue
        g = _mod_gcd(A, B, p)
        dg = len(g) - 1
        if dg == 0:
            return a._like([QQ.one])
        if dg > best:
            continue
        g = [x * lcg % p for x in g]
        if acc is None or dg < best:
            acc, modulus, best, prev = g, p, dg, None
        else:
            inv = pow(modulus, -1, p)
            new_mod = modulus * p
            acc = [(u + (v - u) * inv % p * modulus) % new_mod for u, v in zip(acc, g)]
            modulus = new_mod
        half = modulus // 2
        lift = [x - modulus if x > half else x for x in acc]
        if lift == prev:
            cg = 0
            for c in lift:
                cg = igcd(cg, c)
            cand = [c // cg for c in lift]
            if _int_divides(cand, A) and _int_divides(cand, B):
                return Poly._make([Fraction(c) for c in cand], QQ, a.var).monic()
        prev = lift


# ---------------------------------------------------------------------------
# rational roots by p-adic lifting and rational reconstruction


def _ratrecon(u, m, nbound, dbound):
    r0, r1, t0, t1 = m, u % m, 0, 1
    while r1 > nbound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    n, d = r1, t1
    if d < 0:
        n, d = -n, -d
    if d == 0 or d > dbound or igcd(n, d) != 1:
        return None
    return n, d


def rational_roots(p):
    """The set of roots of p lying in QQ."""
    if not p:
        raise DegenerateInputError("rational roots of the zero polynomial")
    if p.dom is not QQ:
        raise TypeError("rational_roots needs a polynomial over QQ")
    s = squarefree_part(p)
    roots = set()
    if s.degree < 1:
        return roots
    f = _int_primitive(s)
    if f[0] == 0:
        roots.add(Fraction(0))
        f = f[1:]
    if len(f) == 2:
        roots.add(Fraction(-f[0], f[1]))
        return roots
    if len(f) < 2:
        return roots
    lc, c0 = abs(f[-1]), abs(f[0])
    df = [c * i for i, c in enumerate(f) if i]
    for p_ in _small_primes():
        if lc % p_ == 0:
            continue
        if len(_mod_gcd(f, df, p_)) == 1:
            break
    target = 2 * c0 * lc + 1

    def ev(cs, x, m):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % m
        return acc

    for r in range(p_):
        if ev(f, r, p_):
            continue
        u, m = r, p_
        while m < target:
            m = m * m
            u = (u - ev(f, u, m) * pow(ev(df, u, m), -1, m)) % m
        cand = _ratrecon(u, m, c0, lc)
        if cand is None:
            continue
        n, d = cand
        deg = len(f) - 1
        val = sum(c * n ** i * d ** (deg - i) for i, c in enumerate(f))
        if val == 0:
            roots.add(Fraction(n, d))
    return roots
