"""Polynomial maps under substitution composition.

``compose(F, G)`` is the map whose i-th component is ``F_i(G_1, G_2[, G_3])``.
A 2-component map acts on x and y only; z is an inert coefficient variable.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch
from .polycore import VARS, X, Y, Z, Polynomial, as_poly, degree_in, exact_div, substitute


class PolyMap:
    __slots__ = ("components",)

    def __init__(self, components):
        comps = tuple(as_poly(c) for c in components)
        if len(comps) not in (2, 3):
            raise ArityMismatch(f"maps have 2 or 3 components, got {len(comps)}")
        self.components = comps

    @property
    def arity(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        from .textio import print_map

        return f"PolyMap({print_map(self)!r})"

    def __call__(self, p):
        """Substitute this map's components for the variables of ``p``."""
        return substitute(p, dict(zip(VARS, self.components)))


def identity(arity=3):
    return PolyMap((X, Y, Z)[:arity])


def compose(F, G):
    if F.arity != G.arity:
        raise ArityMismatch(f"cannot compose arity {F.arity} with arity {G.arity}")
    return PolyMap(G(c) for c in F.components)


def compose_all(*maps):
    """Left-to-right composition: compose(compose(m0, m1), m2) ..."""
    acc = maps[0]
    for m in maps[1:]:
        acc = compose(acc, m)
    return acc


def verify_inverse(F, G):
    if F.arity != G.arity:
        raise ArityMismatch(f"arity {F.arity} vs {G.arity}")
    ident = identity(F.arity)
    return compose(F, G) == ident and compose(G, F) == ident


def embed_3var(F):
    if F.arity != 2:
        raise ArityMismatch(f"embed_3var needs an arity-2 map, got arity {F.arity}")
    return PolyMap((*F.components, Z))


@dataclass(frozen=True)
class ElementaryMap:
    """The map replacing variable ``target_index`` by ``unit*var + shift``."""

    target_index: int
    unit: Fraction
    shift: Polynomial
    arity: int = 2

    def as_map(self):
        comps = list((X, Y, Z)[: self.arity])
        comps[self.target_index] = comps[self.target_index].scale(self.unit) + self.shift
        return PolyMap(comps)

    def inverse(self):
        inv = 1 / Fraction(self.unit)
        return ElementaryMap(self.target_index, inv, self.shift.scale(-inv), self.arity)


def is_elementary(F):
    """Recognize an elementary map; return ElementaryMap or None.

    Exactly one component may differ from its variable, and it must have the
    form ``u*v + w`` with ``u`` a nonzero rational and ``w`` free of ``v``.
    """
    gens = (X, Y, Z)[: F.arity]
    changed = [i for i, (c, g) in enumerate(zip(F.components, gens)) if c != g]
    if len(changed) != 1:
        return None
    i = changed[0]
    comp = F.components[i]
    if degree_in(comp, i) != 1:
        return None
    without = Polynomial({m: c for m, c in comp.items() if m[i] == 0})
    unit_part = exact_div(comp - without, gens[i])
    if not unit_part.is_constant():
        return None
    return ElementaryMap(i, unit_part.constant_value(), without, F.arity)


@dataclass(frozen=True)
class AffineMap:
    """Linear part of a 2-component affine map over k[z], with translation."""

    matrix: tuple  # ((m11, m12), (m21, m22)) polynomials in z
    translation: tuple
    determinant: Polynomial


def is_affine(F):
    """Recognize ``(m11*x + m12*y + t1, m21*x + m22*y + t2)`` over k[z].

    Returns AffineMap or None; only arity-2 maps qualify.
    """
    if F.arity != 2:
        return None
    rows, trans = [], []
    for comp in F.components:
        row = [Polynomial(), Polynomial()]
        t = {}
        for mon, c in comp.items():
            ex, ey, ez = mon
            if ex + ey == 0:
                t[mon] = c
            elif (ex, ey) == (1, 0):
                row[0] = row[0] + Polynomial.monomial((0, 0, ez), c)
            elif (ex, ey) == (0, 1):
                row[1] = row[1] + Polynomial.monomial((0, 0, ez), c)
            else:
                return None
        rows.append(tuple(row))
        trans.append(Polynomial(t))
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    return AffineMap(tuple(rows), tuple(trans), det)


def is_tame_factor(F):
    """Elementary, or affine with unit (nonzero constant) determinant."""
    if is_elementary(F) is not None:
        return True
    aff = is_affine(F)
    return aff is not None and aff.determinant.is_constant() and not aff.determinant.is_zero()
