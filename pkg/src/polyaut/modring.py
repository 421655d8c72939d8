"""Arithmetic in k[z] and in the quotient k[z]/(p).

Univariate work is done on dense coefficient lists (lowest degree first) and
converted back to :class:`Polynomial` at the boundary. Elements of the
quotient are always returned in reduced form: every z-coefficient has degree
below ``deg p``.
"""

from fractions import Fraction

from .errors import ConstantModulus, NotCoprime, NotInvertible
from .polycore import ONE, X, Polynomial, coefficients_in, degree_in, substitute, partial


# -- dense univariate helpers ---------------------------------------------


def _trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def to_dense(p):
    """Coefficient list of a polynomial in z alone."""
    if degree_in(p, "x") > 0 or degree_in(p, "y") > 0:
        raise ValueError(f"expected a polynomial in z only, got {p}")
    n = degree_in(p, "z")
    c = [Fraction(0)] * (n + 1)
    for mon, v in p.items():
        c[mon[2]] = v
    return c


def from_dense(c):
    return Polynomial({(0, 0, i): v for i, v in enumerate(c) if v})


def _sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    return _trim([a[i] - (b[i] if i < len(b) else 0) for i in range(n)])


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim(out)


def _divmod(a, b):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, v in enumerate(b):
            a[shift + i] -= c * v
        a.pop()
        _trim(a)
    return _trim(q), a


def _monic(a):
    return [v / a[-1] for v in a] if a else a


def _egcd(a, b):
    """Dense extended gcd: (g, u, v) with u*a + v*b = g monic."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1))
        t0, t1 = t1, _sub(t0, _mul(q, t1))
    if not r0:
        return [], [], []
    lead = r0[-1]
    return _monic(r0), [v / lead for v in s0], [v / lead for v in t0]


# -- public operations on ZPoly / ZXPoly -----------------------------------


def _check_modulus(p):
    if degree_in(p, "z") < 1:
        raise ConstantModulus(f"modulus must be a non-constant polynomial in z, got {p}")
    return to_dense(p)


def zmod(q, p):
    """Remainder of a z-polynomial after division by p."""
    return from_dense(_divmod(to_dense(q), to_dense(p))[1])


def reduce_mod_p(q, p):
    """Reduce every z-coefficient of ``q`` modulo ``p``.

    ``q`` may involve x and y; the coefficient of each (x, y) monomial is
    reduced separately.
    """
    pd = _check_modulus(p)
    groups = {}
    for mon, c in q.items():
        key = (mon[0], mon[1])
        groups.setdefault(key, {})[mon[2]] = c
    out = {}
    for (ex, ey), zc in groups.items():
        dense = [Fraction(0)] * (max(zc) + 1)
        for e, c in zc.items():
            dense[e] = c
        rem = _divmod(_trim(dense), pd)[1]
        for e, c in enumerate(rem):
            if c:
                out[(ex, ey, e)] = c
    return Polynomial(out)


def ext_gcd(a, b):
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` the monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValueError("ext_gcd of two zero polynomials")
    g, u, v = _egcd(to_dense(a), to_dense(b))
    return from_dense(g), from_dense(u), from_dense(v)


def bezout_cd(a1, p):
    """Return ``(c, d)`` with ``d*a1 - c*p == 1`` and ``deg d < deg p``."""
    pd = _check_modulus(p)
    g, u, _ = _egcd(to_dense(a1), pd)
    if g != [Fraction(1)]:
        raise NotCoprime(
            f"{a1} is not a unit modulo {p}", witness=from_dense(g) if g else a1
        )
    d = _divmod(u, pd)[1]
    c, rem = _divmod(_sub(_mul(d, to_dense(a1)), [Fraction(1)]), pd)
    assert not rem
    return from_dense(c), from_dense(d)


def inverse_mod(u, p):
    """Inverse of the z-polynomial ``u`` in k[z]/(p), reduced."""
    return bezout_cd(u, p)[1]


def radical(p):
    """Squarefree part ``p / gcd(p, p')``, made monic."""
    if p.is_zero():
        raise ValueError("radical of the zero polynomial")
    pd = to_dense(p)
    g, _, _ = _egcd(pd, to_dense(partial(p, "z")))
    if not g:  # p is a nonzero constant
        return ONE
    q, rem = _divmod(pd, g)
    assert not rem
    return from_dense(_monic(q))


def compose_x(a, b):
    """``a(z, b)``: substitute ``b`` for x in ``a``."""
    return substitute(a, {"x": b})


def check_inverse_pair(a, b, p):
    """True iff a(b(x)) and b(a(x)) both reduce to x modulo p."""
    _check_modulus(p)
    return (
        reduce_mod_p(compose_x(a, b) - X, p).is_zero()
        and reduce_mod_p(compose_x(b, a) - X, p).is_zero()
    )


def _times_scalar_mod(q, u, p):
    """Multiply every coefficient of q by the z-polynomial u, reduce mod p."""
    return reduce_mod_p(q * u, p)


def _invert_unit_series(w, p):
    """Inverse in (k[z]/(p))[x] of ``w`` = unit + nilpotent-coefficient part.

    ``w``'s constant-in-x coefficient must be a unit mod p and every other
    coefficient must be nilpotent mod p.
    """
    coeffs = coefficients_in(w, "x")
    w0 = coeffs.get(0, Polynomial())
    w0_inv = inverse_mod(w0, p)
    m = _times_scalar_mod(w - w0, w0_inv, p)
    # (1 + m)^-1 = sum (-m)^j, finite because m is nilpotent
    total = ONE
    term = ONE
    for _ in range(degree_in(p, "z") + 1):
        term = reduce_mod_p(-term * m, p)
        if term.is_zero():
            break
        total = total + term
    else:
        raise NotInvertible("derivative is not a unit modulo p", witness=w)
    return _times_scalar_mod(total, w0_inv, p)


def invert_mod_p(a, p):
    """Compositional inverse of ``a(z, x)`` in (k[z]/(p))[x], by Newton lifting.

    Modulo the radical r of p an automorphism of the one-variable polynomial
    ring is affine, ``u*x + v`` with u a unit. Starting from its affine inverse,
    each Newton step doubles the nilpotency order of the error.
    """
    pd = _check_modulus(p)
    if degree_in(a, "y") > 0:
        raise ValueError("a must not involve y")
    r = radical(p)
    a_r = reduce_mod_p(a, r)
    parts = coefficients_in(a_r, "x")
    if degree_in(a_r, "x") != 1:
        raise NotInvertible(
            f"reduction modulo {r} is not affine in x", witness=a_r
        )
    u, v = parts[1], parts.get(0, Polynomial())
    g, _, _ = _egcd(to_dense(u), pd)
    if g != [Fraction(1)]:
        raise NotInvertible(f"linear coefficient {u} is not a unit modulo {p}", witness=u)

    u_inv = inverse_mod(u, p)
    b = reduce_mod_p((X - v) * u_inv, p)
    da = partial(a, "x")
    max_steps = (len(pd) - 1).bit_length() + 2
    for _ in range(max_steps):
        err = reduce_mod_p(compose_x(a, b) - X, p)
        if err.is_zero():
            return b
        slope_inv = _invert_unit_series(reduce_mod_p(compose_x(da, b), p), p)
        b = reduce_mod_p(b - err * slope_inv, p)
    raise NotInvertible("Newton lifting did not converge", witness=a)
