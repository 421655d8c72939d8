"""Build a k[z]-automorphism (f1, f2) of k[z][x, y] and its inverse.

Given p in k[z] \\ k and a, b in k[z][x] that are mutually inverse modulo p:

    f1 = p*y + a(x)         p*f2 = b(f1) - x
    g1 = b(x) - p*y         p*g2 = x - a(g1)
"""

from dataclasses import dataclass

from .autcore import PolyMap, embed_3var, verify_inverse
from .errors import CongruenceFailed, NotDivisible
from .modring import check_inverse_pair, compose_x, invert_mod_p, reduce_mod_p
from .polycore import X, Y, Polynomial, degree_in, exact_div

__all__ = [
    "ConstructionInput",
    "ConstructionResult",
    "build_pair",
    "construct",
    "embed_3var",
]


@dataclass(frozen=True)
class ConstructionInput:
    p: Polynomial
    a: Polynomial
    b: Polynomial


@dataclass(frozen=True)
class ConstructionResult:
    f1: Polynomial
    f2: Polynomial
    g1: Polynomial
    g2: Polynomial
    input: ConstructionInput

    @property
    def F(self):
        return PolyMap((self.f1, self.f2))

    @property
    def G(self):
        return PolyMap((self.g1, self.g2))

    def check(self):
        """Re-verify every defining identity exactly."""
        p, a, b = self.input.p, self.input.a, self.input.b
        return (
            self.f1 == p * Y + a
            and p * self.f2 == compose_x(b, self.f1) - X
            and self.g1 == b - p * Y
            and p * self.g2 == X - compose_x(a, self.g1)
            and verify_inverse(self.F, self.G)
        )


def _divide_by_p(num, p, what):
    try:
        return exact_div(num, p)
    except NotDivisible:
        raise CongruenceFailed(
            f"{what} is not divisible by p; a and b are not inverse modulo p",
            witness=reduce_mod_p(num, p),
        ) from None


def build_pair(inp):
    p, a, b = inp.p, inp.a, inp.b
    for name, q in (("a", a), ("b", b)):
        if degree_in(q, "y") > 0:
            raise ValueError(f"{name} must be a polynomial in z and x only")
    f1 = p * Y + a
    f2 = _divide_by_p(compose_x(b, f1) - X, p, "b(f1) - x")
    g1 = b - p * Y
    g2 = _divide_by_p(X - compose_x(a, g1), p, "x - a(g1)")
    return ConstructionResult(f1, f2, g1, g2, inp)


def construct(p, a, b=None):
    """Build the pair, computing ``b`` by Newton lifting when not supplied.

    A supplied ``b`` is validated and used verbatim.
    """
    if b is None:
        b = invert_mod_p(a, p)
    elif not check_inverse_pair(a, b, p):
        raise CongruenceFailed(
            "supplied b is not an inverse of a modulo p",
            witness=reduce_mod_p(compose_x(b, a) - X, p),
        )
    return build_pair(ConstructionInput(p, a, b))
