"""Seeded random inputs for the randomized suites and experiment scripts."""

import random
from fractions import Fraction

from .autcore import PolyMap, compose, ElementaryMap
from .modring import ext_gcd, radical
from .polycore import ONE, X, Y, Z, Polynomial

MODULI = (Z, Z**2, Z**3, Z**2 - 1, Z**3 + Z)
UNITS = (ONE, 2 * ONE, 1 + Z)


def random_poly(rng, variables=("x", "y", "z"), max_terms=4, max_deg=3, coeff_range=3):
    """Sparse polynomial with small integer (occasionally rational) coefficients."""
    idx = [("x", "y", "z").index(v) for v in variables]
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mon = [0, 0, 0]
        budget = rng.randint(0, max_deg)
        for i in idx:
            e = rng.randint(0, budget)
            mon[i] = e
            budget -= e
        c = rng.randint(-coeff_range, coeff_range)
        if rng.random() < 0.15:
            c = Fraction(c, rng.randint(2, 5))
        terms[tuple(mon)] = c
    return Polynomial(terms)


def random_zpoly(rng, max_deg=1, coeff_range=2):
    return Polynomial({(0, 0, i): rng.randint(-coeff_range, coeff_range) for i in range(max_deg + 1)})


def random_construction_input(rng, p=None):
    """(p, a) with a(x) invertible modulo p.

    a = a0 + u*x + p*q + r*n where r is the radical of p, u a unit mod p,
    q arbitrary and n an x^2 term whose coefficient is nilpotent modulo p.
    """
    if p is None:
        p = rng.choice(MODULI)
    units = [u for u in UNITS if ext_gcd(u, p)[0] == 1]
    u = rng.choice(units)
    a0 = random_zpoly(rng, 1)
    q = random_poly(rng, ("x", "z"), max_terms=2, max_deg=2, coeff_range=2)
    n = Polynomial()
    if rng.random() < 0.6:
        n = random_zpoly(rng, 0, 2) * X**2
    r = radical(p)
    return p, a0 + u * X + p * q + r * n


def random_elementary(rng, max_shift_deg=2, arity=2):
    """Random elementary map of Q[z][x, y] (z is a coefficient)."""
    target = rng.randrange(arity)
    other = "y" if target == 0 else "x"
    unit = Fraction(rng.choice([1, -1, 2, Fraction(1, 2)]))
    shift = Polynomial()
    for _ in range(rng.randint(1, 2)):
        e = rng.randint(1, max_shift_deg)
        coeff = random_zpoly(rng, 1, 2)
        shift = shift + coeff * Polynomial.var(other) ** e
    return ElementaryMap(target, unit, shift, arity)


def random_tame_map(rng, max_factors=6, max_total_degree=8):
    """Product of at most ``max_factors`` elementary maps, degree-bounded.

    Factors that would push the first component past ``max_total_degree`` are
    redrawn as linear (degree-one shift) factors.
    """
    F = PolyMap((X, Y))
    for _ in range(rng.randint(1, max_factors)):
        E = random_elementary(rng).as_map()
        G = compose(F, E)
        if max(c.total_degree() for c in G) > max_total_degree:
            E = random_elementary(rng, max_shift_deg=1).as_map()
            G = compose(F, E)
            if max(c.total_degree() for c in G) > max_total_degree:
                continue
        F = G
    return F


def rng_for(seed):
    return random.Random(seed)
