import pytest
from hypothesis import given, strategies as st

from akblocks.errors import PreconditionError
from akblocks.ffield import (
    ContextMismatch,
    FieldContext,
    FieldElement,
    is_prime,
    multiplicative_order,
    quantum_characteristic,
    smallest_of_order,
)
from oracles import order_of

PRIMES = [2, 3, 5, 7, 11, 13, 17, 101]


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, a, b, c):
    x, y, z = (FieldElement(v, p) for v in (a, b, c))
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == 0
    assert x + (-x) == FieldElement(0, p)
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        FieldElement(0, 7).inverse()
    with pytest.raises(ZeroDivisionError):
        FieldContext(7, 2).inv(14)


def test_mixed_moduli_rejected():
    with pytest.raises(ContextMismatch):
        FieldElement(1, 5) + FieldElement(1, 7)


@given(st.sampled_from(PRIMES[1:]), st.integers(min_value=2))
def test_quantum_characteristic_is_order(p, q):
    q %= p
    if q in (0, 1):
        return
    assert quantum_characteristic(p, q) == order_of(q, p) == multiplicative_order(p, q)


def test_quantum_characteristic_special_values():
    assert quantum_characteristic(7, 2) == 3
    assert quantum_characteristic(5, 4) == 2
    assert quantum_characteristic(7, 1) == 7
    with pytest.raises(PreconditionError):
        quantum_characteristic(7, 0)


def test_field_context():
    fc = FieldContext(7, 2)
    assert (fc.p, fc.q, fc.e) == (7, 2, 3)
    assert FieldContext.with_order(7, 3).q == 2
    assert smallest_of_order(13, 4) == 5
    for bad in [(6, 2, 0), (7, 1, 0), (7, 0, 0), (7, 2, 6)]:
        with pytest.raises(PreconditionError):
            FieldContext(*bad)
    with pytest.raises(PreconditionError):
        FieldContext.with_order(7, 4)
