import pytest

from fields.polynomials import (
    F2Poly,
    irreducible_by_trial_division,
    is_irreducible,
    is_primitive,
    poly_mul_mod,
    poly_pow_mod,
    prime_factors,
    primitive_trinomial_degrees,
    reciprocal,
    trinomial,
)
from util.errors import ContractError, PrimitivityUndecided

X = F2Poly.parse("x")


def test_parse_and_format():
    poly = F2Poly.parse("x^4+x+1")
    assert poly.mask == 0x13
    assert poly.degree == 4
    assert poly.taps == [0, 1]
    assert str(poly) == "x^4+x+1"
    assert poly.hex == "0x13"
    assert F2Poly.parse("0x13") == poly
    assert F2Poly.parse("x^3 + x^2 + 1") == F2Poly.of_exponents(3, 2, 0)
    with pytest.raises(ContractError):
        F2Poly.parse("x^4+2x")
    with pytest.raises(ContractError):
        F2Poly.parse("0xzz")


def test_mul_mod():
    assert poly_mul_mod(X, X, F2Poly.parse("x^2+x+1")) == F2Poly.parse("x+1")
    assert poly_mul_mod(X, F2Poly.parse("1"), F2Poly.parse("x^3+x+1")) == X
    assert poly_mul_mod(F2Poly.parse("x^2"), X, F2Poly.parse("x^3+x+1")) == F2Poly.parse("x+1")
    with pytest.raises(ContractError):
        poly_mul_mod(X, X, F2Poly(mask=0))
    assert poly_pow_mod(X, 7, trinomial(3)) == F2Poly.parse("1")


def test_irreducibility():
    assert is_irreducible(F2Poly.parse("x^3+x+1"))
    assert not is_irreducible(F2Poly.parse("x^5+x+1"))
    assert not is_irreducible(F2Poly.parse("x^2+1"))
    for mask in range(2, 1 << 11):
        poly = F2Poly(mask=mask)
        assert is_irreducible(poly) == irreducible_by_trial_division(poly), str(poly)


def test_primitivity():
    assert is_primitive(F2Poly.parse("x^3+x+1"))
    assert not is_primitive(F2Poly.parse("x^4+x^3+x^2+x+1"))
    assert is_irreducible(F2Poly.parse("x^4+x^3+x^2+x+1"))
    assert not is_primitive(F2Poly.parse("x^5+x+1"))
    with pytest.raises(ContractError):
        is_primitive(X)


def test_prime_factors_budget():
    assert prime_factors(15) == [3, 5]
    assert prime_factors((1 << 22) - 1) == [3, 23, 89, 683]
    with pytest.raises(PrimitivityUndecided):
        prime_factors((1 << 22) - 1, budget=10)


def test_trinomials():
    assert trinomial(3) == F2Poly.parse("x^3+x+1")
    assert trinomial(2) == F2Poly.parse("x^2+x+1")
    assert trinomial(7) == F2Poly.parse("x^7+x+1")
    with pytest.raises(ContractError):
        trinomial(1)


def test_primitive_trinomial_degrees():
    assert primitive_trinomial_degrees(2) == [2]
    assert primitive_trinomial_degrees(5) == [2, 3, 4]
    assert primitive_trinomial_degrees(7) == [2, 3, 4, 6, 7]
    assert primitive_trinomial_degrees(22) == [2, 3, 4, 6, 7, 15, 22]


def test_reciprocal():
    assert reciprocal(F2Poly.parse("x^3+x+1")) == F2Poly.parse("x^3+x^2+1")
    assert reciprocal(F2Poly.parse("x^2+x+1")) == F2Poly.parse("x^2+x+1")
    with pytest.raises(ContractError):
        reciprocal(F2Poly.parse("x^3+x"))
    for mask in range(3, 1 << 9, 2):
        poly = F2Poly(mask=mask)
        assert reciprocal(reciprocal(poly)) == poly


def test_reciprocal_preserves_primitivity():
    for mask in range(5, 1 << 13, 2):
        poly = F2Poly(mask=mask)
        if is_irreducible(poly):
            assert is_primitive(poly) == is_primitive(reciprocal(poly)), str(poly)
