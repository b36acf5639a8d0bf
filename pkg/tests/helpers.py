from fractions import Fraction

import sympy

from portraits.exactalg import QQ, QQt, Poly
from portraits.parser import parse_map, parse_point, parse_t_polynomial

T_SYM = sympy.Symbol("t")
Z_SYM = sympy.Symbol("z")


def tpoly(text):
    return parse_t_polynomial(text)


def zpoly(text):
    """Polynomial in z over QQ[t] from grammar text."""
    from portraits.parser import parse_expression

    num, den = parse_expression(text)
    assert den.degree == 0 and den.lc.degree == 0
    return num * Poly.const(Fraction(1) / den.lc.lc, QQ, "t")


def to_sympy(p):
    """Poly over QQ or QQ[t] to a sympy expression."""
    if p.dom is QQ:
        return sum(sympy.Rational(c.numerator, c.denominator) * T_SYM**i for i, c in enumerate(p.coeffs))
    return sum(to_sympy(c) * Z_SYM**i for i, c in enumerate(p.coeffs))


def from_sympy_t(expr):
    sp = sympy.Poly(expr, T_SYM)
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())]
    return Poly(cs, QQ, "t")




# one line per acceptance criterion, printed in the pytest terminal summary
ACCEPTANCE_LINES = []


def report(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok
