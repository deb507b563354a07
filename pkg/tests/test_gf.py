import itertools

import pytest

from frsprune.errors import DivisionByZero, NotPrime
from frsprune.gf import FieldElement, PrimeField, field_arith, inv, is_prime, multiplicative_order, primitive_element


def test_add_wraps():
    F = PrimeField(17)
    assert field_arith(F(5), F(13), "add") == F(1)


def test_inverse_of_three_by_enumeration():
    expected = next(x for x in range(17) if 3 * x % 17 == 1)
    assert expected == 6
    F = PrimeField(17)
    assert field_arith(F(1), F(3), "div") == F(expected)


def test_zero_absorbs():
    F = PrimeField(17)
    assert field_arith(F(0), F(9), "mul") == F(0)


def test_division_by_zero():
    F = PrimeField(17)
    with pytest.raises(DivisionByZero):
        field_arith(F(4), F(0), "div")
    with pytest.raises(ZeroDivisionError):
        F(4) / 0


@pytest.mark.parametrize("q", [5, 17, 31, 61, 131])
def test_inv_matches_pow(q):
    for a in range(1, q):
        assert inv(a, q) == pow(a, q - 2, q)


@pytest.mark.parametrize("q, expected", [(17, 3), (5, 2)])
def test_primitive_element_small(q, expected):
    # enumeration: expected has no power equal to 1 before q - 1
    assert all(pow(expected, t, q) != 1 for t in range(1, q - 1))
    assert all(any(pow(c, t, q) == 1 for t in range(1, q - 1)) for c in range(2, expected))
    assert primitive_element(q) == FieldElement(expected, q)


def test_primitive_element_rejects_composite():
    with pytest.raises(NotPrime):
        primitive_element(16)
    with pytest.raises(NotPrime):
        PrimeField(21)


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13, 17, 31, 61])
def test_generator_powers_are_distinct(q):
    g = primitive_element(q)
    powers = {int(g**t) for t in range(q - 1)}
    assert len(powers) == q - 1
    assert g.order() == q - 1


@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_ring_axioms_exhaustive(q):
    F = PrimeField(q)
    els = F.elements()
    for a, b, c in itertools.product(els, repeat=3):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_is_prime_and_order():
    assert [x for x in range(30) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert multiplicative_order(4, 17) == 4
    assert multiplicative_order(16, 17) == 2


def test_element_ops_and_mismatch():
    F = PrimeField(7)
    a = F(3)
    assert -a == F(4)
    assert a**-1 * a == F(1)
    assert 2 - a == F(6)
    assert 1 / a == a.inverse()
    assert str(a) == "3"
    with pytest.raises(ValueError):
        field_arith(a, FieldElement(1, 11), "add")
