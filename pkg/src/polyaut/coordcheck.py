"""Coordinate tests in two variables over Q[z] and over Q.

f is a coordinate of R[x, y] (R a Q-algebra) iff the Jacobian derivation
D = f_y d/dx - f_x d/dy is locally nilpotent and 1 lies in (f_x, f_y). Local
nilpotency is checked through the iterate bound D^(d+2)(x) = D^(d+2)(y) = 0,
with d the largest x- or y-degree of f_x and f_y. Both conditions are
decided symbolically over Q, so no field extension is needed.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .derivation import NilpotencyReport, jacobian_derivation, lnd_check
from .errors import ConstantInput, HasZVariable
from .groebner import contains_one
from .polycore import Polynomial, degree_in, partial, substitute

HYPOTHESIS_NOTE = (
    "assumed, not verified: Q[x,y,z]/(f) is isomorphic to a polynomial ring "
    "in two variables; the coordinate certificate below does not depend on it"
)


class CoordVerdict(enum.Enum):
    COORDINATE = "Coordinate"
    NOT_COORDINATE = "NotCoordinate"


@dataclass(frozen=True)
class CoordinateReport:
    lnd_ok: bool
    unimodular_ok: bool
    verdict: CoordVerdict
    degree_bound: int
    nilpotency: NilpotencyReport

    @property
    def is_coordinate(self):
        return self.verdict is CoordVerdict.COORDINATE


@dataclass(frozen=True)
class SliceReport:
    slice_value: Fraction
    slice_coordinate_ok: bool
    z_coordinate_ok: bool
    hypothesis_note: str
    slice_report: Optional[CoordinateReport]
    z_report: CoordinateReport

    @property
    def conclusion(self):
        if self.slice_coordinate_ok and self.z_coordinate_ok:
            return "f is a Q[z]-coordinate (certified by the derivation and unit-ideal tests)"
        if self.z_coordinate_ok:
            return "f is a Q[z]-coordinate; the chosen slice is not a coordinate"
        return "f is not a Q[z]-coordinate"


def jacobian_degree_bound(f):
    fx, fy = partial(f, "x"), partial(f, "y")
    d = max(degree_in(g, v) for g in (fx, fy) for v in ("x", "y"))
    return d + 2


def _coordinate_test(f, max_pairs=None):
    if f.is_constant():
        raise ConstantInput("a constant is never a coordinate", witness=f)
    bound = max(jacobian_degree_bound(f), 1)
    nil = lnd_check(jacobian_derivation(f), bound)
    unimodular = contains_one([partial(f, "x"), partial(f, "y")], max_pairs=max_pairs)
    ok = nil.is_lnd and unimodular
    verdict = CoordVerdict.COORDINATE if ok else CoordVerdict.NOT_COORDINATE
    return CoordinateReport(nil.is_lnd, unimodular, verdict, bound, nil)


def coordinate_test_z(f, max_pairs=None):
    """Is f a coordinate of Q[z][x, y]?"""
    return _coordinate_test(f, max_pairs)


def coordinate_test_2var(f, max_pairs=None):
    """Is f (free of z) a coordinate of Q[x, y]?"""
    if degree_in(f, "z") > 0:
        raise HasZVariable("polynomial involves z", witness=f)
    return _coordinate_test(f, max_pairs)


def fiber_slice(f, b):
    return substitute(f, {"z": Polynomial.constant(b)})


def slice_report(f, a, max_pairs=None):
    """Check f(x, y, a) over Q and f over Q[z].

    A constant slice counts as a failed slice check rather than an error.
    """
    a = Fraction(a)
    z_rep = coordinate_test_z(f, max_pairs)
    sl = fiber_slice(f, a)
    sl_rep = None if sl.is_constant() else coordinate_test_2var(sl, max_pairs)
    return SliceReport(
        slice_value=a,
        slice_coordinate_ok=sl_rep is not None and sl_rep.is_coordinate,
        z_coordinate_ok=z_rep.is_coordinate,
        hypothesis_note=HYPOTHESIS_NOTE,
        slice_report=sl_rep,
        z_report=z_rep,
    )
