"""Derivations of Q[x, y, z] and their exponentials."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .autcore import PolyMap
from .errors import KernelViolation, NotLocallyNilpotent, UnsupportedDerivation
from .polycore import ONE, X, Y, Z, Polynomial, as_poly, partial

DEFAULT_MAX_ITERATES = 200


@dataclass(frozen=True)
class Derivation:
    image_x: Polynomial
    image_y: Polynomial
    image_z: Polynomial = Polynomial()

    @classmethod
    def from_images(cls, ix, iy, iz=0):
        return cls(as_poly(ix), as_poly(iy), as_poly(iz))

    def __call__(self, g):
        return apply_derivation(self, g)


@dataclass(frozen=True)
class NilpotencyReport:
    is_lnd: bool
    bound_used: int
    witness: Optional[Tuple[str, Polynomial]] = None


def jacobian_derivation(f):
    """D = f_y d/dx - f_x d/dy."""
    return Derivation(partial(f, "y"), -partial(f, "x"), Polynomial())


def apply_derivation(D, g):
    out = Polynomial()
    for img, v in ((D.image_x, "x"), (D.image_y, "y"), (D.image_z, "z")):
        if img:
            dg = partial(g, v)
            if dg:
                out = out + img * dg
    return out


def iterates(D, g, count):
    """[g, D(g), ..., D^count(g)], stopping early once an iterate is zero."""
    seq = [g]
    for _ in range(count):
        if seq[-1].is_zero():
            break
        seq.append(apply_derivation(D, seq[-1]))
    return seq


def _require_z_constant(D):
    if not D.image_z.is_zero():
        raise UnsupportedDerivation(
            "only derivations with D(z) = 0 are supported", witness=D.image_z
        )


def lnd_check(D, bound):
    """Decide whether D^bound kills x and y (hence D is locally nilpotent).

    With D(z) = 0, vanishing on the generators is enough by the Leibniz rule.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    _require_z_constant(D)
    for name, gen in (("x", X), ("y", Y)):
        it = gen
        for _ in range(bound):
            it = apply_derivation(D, it)
            if it.is_zero():
                break
        if not it.is_zero():
            return NilpotencyReport(False, bound, (name, it))
    return NilpotencyReport(True, bound)


def nilpotency_index(D, g, cap=DEFAULT_MAX_ITERATES):
    """Least n with D^n(g) = 0, or None if not reached within ``cap`` steps."""
    it = g
    for n in range(cap + 1):
        if it.is_zero():
            return n
        it = apply_derivation(D, it)
    return None


def exp_map(D, s=ONE, max_iterates=DEFAULT_MAX_ITERATES):
    """The automorphism exp(s*D), for s in the kernel of D.

    Component v is the finite sum of s^n D^n(v) / n!.
    """
    _require_z_constant(D)
    s = as_poly(s)
    if apply_derivation(D, s):
        raise KernelViolation("s is not in the kernel of D", witness=apply_derivation(D, s))
    comps = []
    for gen in (X, Y, Z):
        seq = iterates(D, gen, max_iterates)
        if not seq[-1].is_zero():
            raise NotLocallyNilpotent(
                f"D^{max_iterates} does not vanish on a generator", witness=seq[-1]
            )
        total = Polynomial()
        s_pow = ONE
        fact = 1
        for n, term in enumerate(seq):
            if n:
                s_pow = s_pow * s
                fact *= n
            if term:
                total = total + (s_pow * term).scale(Fraction(1, fact))
        comps.append(total)
    return PolyMap(comps)
