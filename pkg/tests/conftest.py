from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from polyaut.polycore import Polynomial
from polyaut.textio import parse_poly, print_canonical

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SX, SY, SZ = sympy.symbols("x y z")


def to_sympy(p):
    """Independent route: rebuild from the exponent/coefficient data."""
    expr = sympy.Integer(0)
    for (ex, ey, ez), c in p.items():
        expr += sympy.Rational(c.numerator, c.denominator) * SX**ex * SY**ey * SZ**ez
    return expr


def from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), SX, SY, SZ)
    return Polynomial({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


@pytest.fixture
def P():
    return parse_poly


@pytest.fixture
def show():
    return print_canonical


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)
monomials = st.tuples(*(st.integers(0, 3),) * 3)


@st.composite
def polys(draw, max_terms=5, variables=("x", "y", "z")):
    raw = draw(st.dictionaries(monomials, coefficients, max_size=max_terms))
    keep = [i for i, v in enumerate(("x", "y", "z")) if v in variables]
    terms = {}
    for mon, c in raw.items():
        mon = tuple(e if i in keep else 0 for i, e in enumerate(mon))
        terms[mon] = terms.get(mon, 0) + c
    return Polynomial(terms)


@st.composite
def nonzero_polys(draw, max_terms=4):
    p = draw(polys(max_terms=max_terms))
    return p if p else Polynomial.constant(draw(coefficients))
