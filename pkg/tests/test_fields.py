import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cartier.errors import DivisionByZero, InvalidPrime, UndefinedPower
from cartier.fields import (
    ExtFieldCtx,
    FpElement,
    PrimeModulus,
    ext_pow,
    find_irreducible,
    fp_inv,
    irreducibles,
    is_irreducible,
)


def _inverse_by_search(a, p):
    return next(b for b in range(1, p) if a * b % p == 1)


@pytest.mark.parametrize("a,p,expected", [(1, 5, 1), (2, 5, 3), (7, 13, 2)])
def test_fp_inv_examples(a, p, expected):
    assert _inverse_by_search(a, p) == expected
    assert fp_inv(PrimeModulus(p)(a)).value == expected


def test_fp_inv_zero():
    with pytest.raises(DivisionByZero):
        fp_inv(PrimeModulus(5)(0))
    with pytest.raises(ZeroDivisionError):
        PrimeModulus(5)(3) / 0


def test_prime_modulus_rejects_composites():
    for bad in (0, 1, 4, 9, 91):
        with pytest.raises(InvalidPrime):
            PrimeModulus(bad)


def test_inverse_random_ten_thousand():
    rng = random.Random(1)
    for _ in range(10_000):
        p = rng.choice([5, 7, 11, 13, 65521, 1048573])
        a = PrimeModulus(p)(rng.randrange(1, p))
        assert (a * fp_inv(a)).value == 1


@given(st.sampled_from([5, 7, 11, 13, 101]), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, x, y, z):
    F = PrimeModulus(p)
    a, b, c = F(x), F(y), F(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F(0)
    assert a**p == a


def _all_monic(p, d):
    for low in itertools.product(range(p), repeat=d):
        yield tuple(low) + (1,)


def _mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return tuple(out)


def _irreducible_by_products(p, e):
    """Monic polys of degree e that are not a product of two monic lower-degree ones."""
    reducible = set()
    for d in range(1, e // 2 + 1):
        for f in _all_monic(p, d):
            for g in _all_monic(p, e - d):
                reducible.add(_mul(f, g, p))
    return {f for f in _all_monic(p, e) if f not in reducible}


@pytest.mark.parametrize("p,e", [(5, 2), (5, 3), (7, 2), (7, 3), (5, 4)])
def test_irreducibility_against_product_enumeration(p, e):
    oracle = _irreducible_by_products(p, e)
    assert {f for f in _all_monic(p, e) if is_irreducible(f, p)} == oracle


@pytest.mark.parametrize(
    "p,e,expected",
    [
        (5, 1, (0, 1)),  # x
        (5, 2, (2, 0, 1)),  # x^2 + 2
        (7, 2, (1, 0, 1)),  # x^2 + 1
    ],
)
def test_find_irreducible_examples(p, e, expected):
    assert find_irreducible(p, e).modulus_poly == expected


def test_find_irreducible_is_first_in_scan_order():
    # scan order: higher coefficients more significant
    for p, e in [(5, 2), (7, 2), (5, 3)]:
        oracle = sorted(_irreducible_by_products(p, e), key=lambda f: f[::-1])
        assert list(irreducibles(p, e)) == oracle
        assert find_irreducible(p, e, index=1).modulus_poly == oracle[1]


def test_ext_field_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        ExtFieldCtx(PrimeModulus(5), 2, (1, 0, 1))  # x^2 + 1 = (x - 2)(x + 2)


def test_ext_pow_examples():
    F25 = find_irreducible(5, 2)
    assert ext_pow(F25.one(), 10**6) == F25.one()
    x = F25.gen()
    assert ext_pow(x, 2) == F25(3)
    F5 = find_irreducible(5, 1)
    assert ext_pow(F5(2), 4) == F5.one()
    with pytest.raises(UndefinedPower):
        ext_pow(F25.zero(), 0)
    assert ext_pow(F25.zero(), 3) == F25.zero()


def test_extension_arithmetic_matches_explicit_reduction():
    F = find_irreducible(7, 2)  # x^2 + 1, so x^2 = -1
    a, b = F((3, 2)), F((5, 4))
    # (3 + 2x)(5 + 4x) = 15 + 22x + 8x^2 = 7 + 22x = 0 + 1x  (mod 7)
    assert (a * b).coeffs == (0, 1)
    assert (a + b).coeffs == (1, 6)
    assert (a - b).coeffs == (5, 5)


@settings(max_examples=60)
@given(st.sampled_from([(5, 1), (5, 2), (7, 1), (7, 2)]), st.data())
def test_multiplicative_order_divides_group_order(ps, data):
    p, s = ps
    F = find_irreducible(p, 2 * s)
    order = p ** (2 * s)
    coeffs = data.draw(st.lists(st.integers(0, p - 1), min_size=2 * s, max_size=2 * s))
    a = F(coeffs)
    if not a:
        return
    assert ext_pow(a, order - 1) == F.one()


def test_frobenius_fixes_prime_subfield():
    F = find_irreducible(11, 2)
    for c in range(11):
        assert ext_pow(F(c), 11) == F(c)


def test_fp_element_reduces_on_construction():
    assert FpElement(17, PrimeModulus(5)).value == 2
