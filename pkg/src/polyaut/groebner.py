"""Buchberger's algorithm over Q in x > y > z, degrevlex order.

Internally polynomials are plain ``{monomial: Fraction}`` dicts; the public
functions take and return :class:`Polynomial`.
"""

import heapq
import os
from dataclasses import dataclass
from typing import List

from .errors import StepLimitExceeded
from .polycore import (
    ONE_MON,
    Polynomial,
    degrevlex_key,
    mon_div,
    mon_divides,
    mon_lcm,
    mon_mul,
)

DEFAULT_MAX_PAIRS = 100_000
MAX_PAIRS_ENV = "POLYAUT_MAX_PAIRS"


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "degrevlex"
    precedence: tuple = ("x", "y", "z")

    def key(self, mon):
        return degrevlex_key(mon)


DEGREVLEX = MonomialOrder()


@dataclass(frozen=True)
class GroebnerBasis:
    generators: List[Polynomial]
    order: MonomialOrder = DEGREVLEX
    pairs_processed: int = 0

    def is_unit(self):
        return len(self.generators) == 1 and self.generators[0] == 1

    def reduce(self, f):
        return normal_form(f, self.generators, self.order)

    def contains(self, f):
        return self.reduce(f).is_zero()


def default_max_pairs():
    value = os.environ.get(MAX_PAIRS_ENV)
    return int(value) if value else DEFAULT_MAX_PAIRS


# -- dict-level kernels -----------------------------------------------------


def _lead(f):
    m = max(f, key=degrevlex_key)
    return m, f[m]


def _monic(f):
    _, c = _lead(f)
    if c == 1:
        return dict(f)
    return {m: v / c for m, v in f.items()}


def _sub_multiple(f, c, shift, g):
    """f -= c * x^shift * g, in place."""
    for m, v in g.items():
        t = mon_mul(shift, m)
        s = f.get(t, 0) - c * v
        if s:
            f[t] = s
        else:
            del f[t]


def _normal_form(f, basis, leads):
    """Full reduction of f by basis (list of monic dicts with lead monomials)."""
    f = dict(f)
    rem = {}
    while f:
        m, c = _lead(f)
        for g, lm in zip(basis, leads):
            if mon_divides(lm, m):
                _sub_multiple(f, c, mon_div(m, lm), g)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


def _s_poly(f, lf, g, lg):
    """S-polynomial of monic f, g with lead monomials lf, lg."""
    lcm = mon_lcm(lf, lg)
    out = {}
    for m, v in f.items():
        out[mon_mul(mon_div(lcm, lf), m)] = v
    _sub_multiple(out, 1, mon_div(lcm, lg), g)
    return out


def _reduce_basis(basis):
    """Minimize and interreduce a Groebner basis of monic dicts."""
    basis = sorted(basis, key=lambda g: degrevlex_key(_lead(g)[0]))
    minimal = []
    for i, g in enumerate(basis):
        lm = _lead(g)[0]
        others = minimal + basis[i + 1:]
        if any(mon_divides(_lead(h)[0], lm) for h in others):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm, _ = _lead(g)
        tail = {m: v for m, v in g.items() if m != lm}
        tail = _normal_form(tail, others, [_lead(h)[0] for h in others])
        tail[lm] = g[lm]
        reduced.append(_monic(tail))
    reduced.sort(key=lambda g: degrevlex_key(_lead(g)[0]), reverse=True)
    return reduced


def _as_dict(p):
    return dict(p.items())


# -- public API -------------------------------------------------------------


def normal_form(f, basis, order=DEGREVLEX):
    dicts = [_monic(_as_dict(g)) for g in basis if not g.is_zero()]
    if len(dicts) != len(basis):
        raise ValueError("basis members must be nonzero")
    rem = _normal_form(_as_dict(f), dicts, [_lead(g)[0] for g in dicts])
    return Polynomial(rem)


def s_polynomial(f, g, order=DEGREVLEX):
    """lcm/LT(f) * f - lcm/LT(g) * g with LT including the coefficient."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s_polynomial needs nonzero inputs")
    fd, gd = _as_dict(f), _as_dict(g)
    lf, cf = _lead(fd)
    lg, cg = _lead(gd)
    fd = {m: v / cf for m, v in fd.items()}
    gd = {m: v / cg for m, v in gd.items()}
    return Polynomial(_s_poly(fd, lf, gd, lg))


def buchberger(gens, order=DEGREVLEX, max_pairs=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed smallest-lcm first, skipping those excluded by the
    coprime-leading-monomial and chain criteria. ``max_pairs`` caps the
    number of S-pairs taken from the queue.
    """
    if max_pairs is None:
        max_pairs = default_max_pairs()
    basis = [_monic(_as_dict(g)) for g in gens if not g.is_zero()]
    if not basis:
        raise ValueError("buchberger needs at least one nonzero generator")
    leads = [_lead(g)[0] for g in basis]
    queue = []
    done = set()

    def push_pairs(j):
        for i in range(j):
            lcm = mon_lcm(leads[i], leads[j])
            heapq.heappush(queue, (degrevlex_key(lcm), i, j, lcm))

    for j in range(1, len(basis)):
        push_pairs(j)

    processed = 0
    if any(lm == ONE_MON for lm in leads):
        queue = []
    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        done.add((i, j))
        processed += 1
        if processed > max_pairs:
            raise StepLimitExceeded(f"more than {max_pairs} S-pairs processed")
        li, lj = leads[i], leads[j]
        if mon_mul(li, lj) == lcm:
            continue
        if _chain_skip(i, j, lcm, leads, done):
            continue
        h = _normal_form(_s_poly(basis[i], li, basis[j], lj), basis, leads)
        if not h:
            continue
        h = _monic(h)
        basis.append(h)
        leads.append(_lead(h)[0])
        if leads[-1] == ONE_MON:
            basis = [h]
            break
        push_pairs(len(basis) - 1)

    reduced = _reduce_basis(basis)
    return GroebnerBasis([Polynomial(g) for g in reduced], order, processed)


def _chain_skip(i, j, lcm, leads, done):
    for k, lk in enumerate(leads):
        if k in (i, j) or not mon_divides(lk, lcm):
            continue
        if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
            return True
    return False


def contains_one(gens, max_pairs=None):
    """True iff 1 lies in the ideal generated by ``gens`` in Q[x, y, z]."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    return buchberger(gens, max_pairs=max_pairs).is_unit()
