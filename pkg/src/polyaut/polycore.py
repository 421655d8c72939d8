"""Exact polynomials over Q in the ordered variables x > y > z.

A monomial is a plain exponent triple ``(e_x, e_y, e_z)``. Iteration always
yields terms in descending graded reverse lexicographic order, so two equal
polynomials have identical term sequences.
"""

from fractions import Fraction
from numbers import Rational

from .errors import NotDivisible

VARS = ("x", "y", "z")
VAR_INDEX = {v: i for i, v in enumerate(VARS)}
ONE_MON = (0, 0, 0)


def degrevlex_key(mon):
    """Sort key: larger key means larger monomial in degrevlex, x > y > z."""
    return (mon[0] + mon[1] + mon[2], -mon[2], -mon[1], -mon[0])


def mon_mul(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def mon_divides(a, b):
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def mon_div(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def mon_lcm(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def _var_index(v):
    if isinstance(v, int):
        return v
    try:
        return VAR_INDEX[v]
    except KeyError:
        raise ValueError(f"unknown variable {v!r}") from None


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_sorted", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mon, c in items:
                mon = tuple(mon)
                if len(mon) != 3 or any(e < 0 for e in mon):
                    raise ValueError(f"bad exponent triple {mon!r}")
                c = Fraction(c)
                if c:
                    c = clean.get(mon, 0) + c
                    if c:
                        clean[mon] = c
                    else:
                        clean.pop(mon, None)
        self._terms = clean
        self._sorted = None
        self._hash = None

    @classmethod
    def _from_clean(cls, d):
        # d must have no zero coefficients; ownership of d passes to the result
        p = cls.__new__(cls)
        p._terms = d
        p._sorted = None
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        c = Fraction(c)
        return cls._from_clean({ONE_MON: c} if c else {})

    @classmethod
    def var(cls, v):
        mon = [0, 0, 0]
        mon[_var_index(v)] = 1
        return cls._from_clean({tuple(mon): Fraction(1)})

    @classmethod
    def monomial(cls, mon, c=1):
        c = Fraction(c)
        return cls._from_clean({tuple(mon): c} if c else {})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self):
        """Mapping monomial -> coefficient, in descending degrevlex order."""
        return dict(self.items())

    def items(self):
        """(monomial, coefficient) pairs in descending degrevlex order."""
        if self._sorted is None:
            self._sorted = tuple(
                sorted(self._terms.items(), key=lambda kv: degrevlex_key(kv[0]), reverse=True)
            )
        return self._sorted

    def coeff(self, mon):
        return self._terms.get(tuple(mon), Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or set(self._terms) == {ONE_MON}

    def constant_value(self):
        """Value of a constant polynomial (raises if not constant)."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(ONE_MON, Fraction(0))

    def leading_monomial(self):
        return max(self._terms, key=degrevlex_key)

    def leading_coeff(self):
        return self._terms[self.leading_monomial()]

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def variables(self):
        return {VARS[i] for m in self._terms for i in range(3) if m[i]}

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial._from_clean(d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._from_clean(_mul_dicts(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Polynomial()
        return Polynomial._from_clean({m: c * v for m, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        from .textio import print_canonical

        return f"Polynomial({print_canonical(self)!r})"

    def __str__(self):
        from .textio import print_canonical

        return print_canonical(self)


X = Polynomial.var("x")
Y = Polynomial.var("y")
Z = Polynomial.var("z")
ZERO = Polynomial()
ONE = Polynomial.constant(1)


def as_poly(value):
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def add(p, q):
    return as_poly(p) + as_poly(q)


def sub(p, q):
    return as_poly(p) - as_poly(q)


def mul(p, q):
    return as_poly(p) * as_poly(q)


def neg(p):
    return -as_poly(p)


def _mul_dicts(a, b):
    if len(a) < len(b):
        a, b = b, a
    d = {}
    get = d.get
    for (b0, b1, b2), cb in b.items():
        for (a0, a1, a2), ca in a.items():
            m = (a0 + b0, a1 + b1, a2 + b2)
            d[m] = get(m, 0) + ca * cb
    return {m: c for m, c in d.items() if c}


def _add_into(acc, d):
    for m, c in d.items():
        s = acc.get(m, 0) + c
        if s:
            acc[m] = s
        else:
            acc.pop(m, None)


def substitute(p, images):
    """Replace each variable of ``p`` by its image and expand.

    ``images`` maps variable names (or indices) to polynomials; variables
    without an image are left alone. Evaluation is Horner-style in each
    variable, so only one multiplication by an image happens per degree step.
    """
    gens = [None, None, None]
    for v, img in images.items():
        gens[_var_index(v)] = as_poly(img)._terms
    return Polynomial._from_clean(_horner(dict(p._terms), gens, 0))


def _horner(terms, gens, level):
    """Evaluate ``terms`` with variables >= level replaced by ``gens``."""
    if level == 3 or not terms:
        return terms
    img = gens[level]
    if img is None:
        return _horner(terms, gens, level + 1)
    groups = {}
    for mon, c in terms.items():
        e = mon[level]
        m = list(mon)
        m[level] = 0
        groups.setdefault(e, {})[tuple(m)] = c
    acc = {}
    top = max(groups)
    for e in range(top, -1, -1):
        if acc:
            acc = _mul_dicts(acc, img)
        if e in groups:
            _add_into(acc, _horner(groups[e], gens, level + 1))
    return acc


def partial(p, v):
    i = _var_index(v)
    d = {}
    for mon, c in p.items():
        if mon[i]:
            m = list(mon)
            m[i] -= 1
            d[tuple(m)] = c * mon[i]
    return Polynomial._from_clean(d)


def degree_in(p, v):
    """Largest exponent of ``v``; the zero polynomial has degree -1."""
    i = _var_index(v)
    if p.is_zero():
        return -1
    return max(mon[i] for mon in p._terms)


def exact_div(p, q):
    """Return ``r`` with ``p == q * r``; raise NotDivisible otherwise."""
    p, q = as_poly(p), as_poly(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lm_q, lc_q = q.leading_monomial(), q.leading_coeff()
    rem = dict(p._terms)
    quot = {}
    while rem:
        lm = max(rem, key=degrevlex_key)
        if not mon_divides(lm_q, lm):
            raise NotDivisible(
                "divisor does not divide dividend", witness=Polynomial._from_clean(rem)
            )
        m = mon_div(lm, lm_q)
        c = rem[lm] / lc_q
        quot[m] = c
        for mq, cq in q._terms.items():
            t = mon_mul(m, mq)
            s = rem.get(t, 0) - c * cq
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return Polynomial._from_clean(quot)


def coefficients_in(p, v):
    """Split ``p`` by powers of ``v``: returns {exponent: coefficient poly}."""
    i = _var_index(v)
    groups = {}
    for mon, c in p.items():
        m = list(mon)
        e = m[i]
        m[i] = 0
        groups.setdefault(e, {})[tuple(m)] = c
    return {e: Polynomial._from_clean(d) for e, d in sorted(groups.items())}
