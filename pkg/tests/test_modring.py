import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyaut.errors import ConstantModulus, NotCoprime, NotInvertible
from polyaut.modring import (
    bezout_cd,
    check_inverse_pair,
    ext_gcd,
    invert_mod_p,
    radical,
    reduce_mod_p,
)
from polyaut.polycore import ONE, X, Z, Polynomial, degree_in, substitute
from polyaut.sampling import MODULI, random_construction_input, random_zpoly


def test_reduce_examples():
    assert reduce_mod_p(X + Z * X**2, Z**2) == X + Z * X**2
    assert reduce_mod_p(Z**3 * X, Z**2).is_zero()
    assert reduce_mod_p((1 - Z**2) * X, Z**2) == X


def test_reduce_rejects_constant_modulus():
    with pytest.raises(ConstantModulus):
        reduce_mod_p(X, Polynomial.constant(3))


def test_ext_gcd_examples():
    g, u, v = ext_gcd(Z**2, 1 + Z)
    assert (g, u, v) == (ONE, ONE, 1 - Z)
    g, u, v = ext_gcd(Z, Z)
    assert g == Z and u * Z + v * Z == Z
    assert ext_gcd(Polynomial(), Z**3) == (Z**3, Polynomial(), ONE)


def test_ext_gcd_monic():
    g, u, v = ext_gcd(2 * Z**2 - 2, 4 * Z - 4)
    assert g == Z - 1
    assert u * (2 * Z**2 - 2) + v * (4 * Z - 4) == g


def test_bezout_examples():
    assert bezout_cd(1 + Z, Z**2) == (-ONE, 1 - Z)
    assert bezout_cd(ONE, Z**2) == (Polynomial(), ONE)
    with pytest.raises(NotCoprime):
        bezout_cd(Z, Z**2)


def test_radical_examples():
    assert radical(Z**2) == Z
    assert radical(Z) == Z
    assert radical(Z**3 + Z**2) == Z**2 + Z
    assert radical(3 * (Z - 1) ** 3 * (Z + 2)) == (Z - 1) * (Z + 2)


def test_check_inverse_pair_examples():
    assert check_inverse_pair(X + Z * X**2, X - Z * X**2, Z**2)
    assert check_inverse_pair(X, X, Z**3 + Z)
    assert not check_inverse_pair(X + Z * X**2, X, Z**2)


def test_invert_examples():
    assert invert_mod_p(X + Z * X**2, Z**2) == X - Z * X**2
    assert invert_mod_p(X + Z * X**2, Z**3) == X - Z * X**2 + 2 * Z**2 * X**3
    with pytest.raises(NotInvertible):
        invert_mod_p(X**2, Z**2)


def test_invert_rejects_nonunit_linear_coefficient():
    with pytest.raises(NotInvertible):
        invert_mod_p(Z * X, Z**2)
    with pytest.raises(NotInvertible):
        invert_mod_p((1 + Z) * X, Z**2 - 1)


def test_invert_mod_z3_by_series_oracle():
    # oracle: b = x - z x^2 + 2 z^2 x^3 solves b + z b^2 = x mod z^3
    b = invert_mod_p(X + Z * X**2, Z**3)
    assert reduce_mod_p(b + Z * b**2 - X, Z**3).is_zero()


zpolys = st.builds(
    lambda cs: Polynomial({(0, 0, i): c for i, c in enumerate(cs)}),
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
)


@given(zpolys, st.sampled_from(MODULI))
def test_bezout_identity_property(u, p):
    if u.is_zero() or ext_gcd(u, p)[0] != 1:
        with pytest.raises(NotCoprime):
            bezout_cd(u, p)
        return
    c, d = bezout_cd(u, p)
    assert d * u - c * p == 1
    assert degree_in(d, "z") < degree_in(p, "z")


@given(zpolys, zpolys)
def test_ext_gcd_bezout_property(a, b):
    if a.is_zero() and b.is_zero():
        return
    g, u, v = ext_gcd(a, b)
    assert u * a + v * b == g
    assert g.leading_coeff() == 1


@given(st.integers(0, 10_000), st.sampled_from(MODULI))
def test_invert_mod_p_property(seed, p):
    _, a = random_construction_input(random.Random(seed), p)
    b = invert_mod_p(a, p)
    assert check_inverse_pair(a, b, p)
    assert reduce_mod_p(b, p) == b


@given(st.integers(0, 10_000), st.sampled_from(MODULI))
def test_reduce_is_idempotent(seed, p):
    rng = random.Random(seed)
    q = random_zpoly(rng, 4) * X**2 + random_zpoly(rng, 5) * X + random_zpoly(rng, 3)
    once = reduce_mod_p(q, p)
    assert reduce_mod_p(once, p) == once
    assert all(mon[2] < degree_in(p, "z") for mon, _ in once.items())


def test_inverse_is_unique_mod_p():
    a = X + Z * X**2 + Z**2 * X**3
    b = invert_mod_p(a, Z**3)
    # any other inverse differs by a multiple of p
    b2 = b + Z**3 * X**5
    assert check_inverse_pair(a, b2, Z**3)
    assert reduce_mod_p(b2, Z**3) == b
    assert substitute(a, {"x": b}) != X  # only congruent, not equal
