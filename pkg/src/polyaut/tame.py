"""Tame/wild classification of maps built by :mod:`polyaut.construct`.

For R = k[z] and a(x) invertible modulo p, the pair (f1, f2) is tame exactly
when a(x) reduces to a degree-one polynomial modulo p. In the tame case the
map factors explicitly as

    (f1, f2) = (x, y + b~(x)) o (x + a0, y) o (a1*x + p*y, c*x + d*y) o (x, y + x^2*a~(x))

with a = a0 + a1*x + p*x^2*a~, b = d*(x - a0) + p*b~ and d*a1 - c*p = 1.
"""

import enum
from dataclasses import dataclass, field
from typing import List, Optional

from .autcore import PolyMap, compose_all, embed_3var, is_affine, is_tame_factor
from .construct import ConstructionInput, ConstructionResult, build_pair
from .errors import NotAutomorphism, NotDivisible, NotInvertible, NotTame, NotTameShape
from .modring import bezout_cd, check_inverse_pair, invert_mod_p, reduce_mod_p
from .polycore import X, Y, Z, Polynomial, coefficients_in, degree_in, exact_div


class Verdict(enum.Enum):
    TAME = "Tame"
    WILD = "Wild"


@dataclass(frozen=True)
class SplitData:
    a0: Polynomial
    a1: Polynomial
    a_tilde: Polynomial
    b_tilde: Polynomial
    c: Polynomial
    d: Polynomial


@dataclass(frozen=True)
class TamenessVerdict:
    verdict: Verdict
    d1: int
    e1: Optional[int] = None
    detail: Optional[SplitData] = None

    @property
    def is_tame(self):
        return self.verdict is Verdict.TAME


@dataclass(frozen=True)
class TameCertificate:
    factors: List[PolyMap]
    target: PolyMap

    def recompose(self):
        return compose_all(*self.factors)

    def verify(self):
        return self.recompose() == self.target and all(is_tame_factor(f) for f in self.factors)


def _inverse_of(a, p, b=None):
    if b is None:
        try:
            return invert_mod_p(a, p)
        except NotInvertible as exc:
            raise NotAutomorphism(f"a(x) is not invertible modulo {p}", witness=exc.witness) from None
    if not check_inverse_pair(a, b, p):
        raise NotAutomorphism("supplied b is not an inverse of a modulo p", witness=b)
    return b


def classify(p, a, b=None):
    b = _inverse_of(a, p, b)
    a_bar = reduce_mod_p(a, p)
    d1 = degree_in(a_bar, "x")
    e1 = degree_in(reduce_mod_p(b, p), "x")
    if d1 != 1:
        return TamenessVerdict(Verdict.WILD, d1, e1)
    a0, a1, a_tilde = split_a(p, a)
    c, d = bezout_cd(a1, p)
    b_tilde = split_b(p, a0, d, b)
    return TamenessVerdict(Verdict.TAME, d1, e1, SplitData(a0, a1, a_tilde, b_tilde, c, d))


def split_a(p, a):
    """Write a = a0 + a1*x + p*x^2*a_tilde; returns (a0, a1, a_tilde)."""
    coeffs = coefficients_in(a, "x")
    a0 = coeffs.get(0, Polynomial())
    a1 = coeffs.get(1, Polynomial())
    higher = Polynomial()
    for e, c in coeffs.items():
        if e < 2:
            continue
        try:
            q = exact_div(c, p)
        except NotDivisible:
            raise NotTameShape(
                f"coefficient of x^{e} is not divisible by p", witness=c
            ) from None
        higher = higher + q * X ** (e - 2)
    return a0, a1, higher


def split_b(p, a0, d, b):
    """Return b_tilde with b = d*(x - a0) + p*b_tilde."""
    return exact_div(b - d * (X - a0), p)


def _certificate(split, p):
    a0, a1, a_tilde, b_tilde, c, d = (
        split.a0, split.a1, split.a_tilde, split.b_tilde, split.c, split.d
    )
    e2_inv = PolyMap((X, Y + b_tilde))
    e1_inv = PolyMap((X + a0, Y))
    linear = PolyMap((a1 * X + p * Y, c * X + d * Y))
    e3_inv = PolyMap((X, Y + X**2 * a_tilde))
    return [e2_inv, e1_inv, linear, e3_inv]


def decompose(p, a, b=None):
    """Tame certificate for the pair built from (p, a, b)."""
    verdict = classify(p, a, b)
    if not verdict.is_tame:
        raise NotTame(f"a(x) has degree {verdict.d1} modulo p", d1=verdict.d1, witness=reduce_mod_p(a, p))
    b = _inverse_of(a, p, b)
    result = build_pair(ConstructionInput(p, a, b))
    return TameCertificate(_certificate(verdict.detail, p), result.F)


def reduced_linear_identity(p, a, b=None):
    """Check (x - a0, y) o (x, y - b~) o F o (x, y - x^2 a~) == (a1 x + p y, c x + d y).

    Returns (lhs, rhs).
    """
    verdict = classify(p, a, b)
    if not verdict.is_tame:
        raise NotTame(f"a(x) has degree {verdict.d1} modulo p", d1=verdict.d1)
    b = _inverse_of(a, p, b)
    s = verdict.detail
    F = build_pair(ConstructionInput(p, a, b)).F
    lhs = compose_all(
        PolyMap((X - s.a0, Y)),
        PolyMap((X, Y - s.b_tilde)),
        F,
        PolyMap((X, Y - X**2 * s.a_tilde)),
    )
    rhs = PolyMap((s.a1 * X + p * Y, s.c * X + s.d * Y))
    return lhs, rhs


def linear_determinant(certificate):
    return is_affine(certificate.factors[2]).determinant


# -- the Nagata automorphism ----------------------------------------------

SWAP = PolyMap((Y, X, Z))


@dataclass(frozen=True)
class NagataData:
    sigma: PolyMap
    construction: ConstructionResult

    def remark_identity(self):
        """sigma == swap o (f1, f2, z) o swap."""
        return self.sigma == compose_all(SWAP, embed_3var(self.construction.F), SWAP)


def nagata_sigma():
    s = X * Z + Y**2
    return PolyMap((X - 2 * s * Y - s**2 * Z, Y + s * Z, Z))


def nagata():
    p, a, b = Z**2, X + Z * X**2, X - Z * X**2
    return NagataData(nagata_sigma(), build_pair(ConstructionInput(p, a, b)))


# -- equivalent-statement report -------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    verdict: TamenessVerdict
    statements: dict = field(default_factory=dict)
    notes: tuple = ()


def equivalence_report(p, a, b=None):
    """Truth values of the four equivalent tameness statements.

    All four share the value decided by the degree of a(x) modulo p. The link
    between tameness over k in three variables and over k[z] in two rests on
    the Shestakov-Umirbaev theorem, which is cited, not re-derived here.
    """
    verdict = classify(p, a, b)
    t = verdict.is_tame
    statements = {
        "(f1, f2, z) in T(3, k)": t,
        "(f1, f2) in T(2, k[z])": t,
        "a in T(1, k[z]/(p))": t,
        "deg_x a mod p == 1": verdict.d1 == 1,
    }
    notes = (
        "T(3, k) <=> T(2, k[z]) relies on the Shestakov-Umirbaev theorem (cited, not checked)",
    )
    return EquivalenceReport(verdict, statements, notes)

