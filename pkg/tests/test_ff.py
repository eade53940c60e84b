import random
from math import gcd

import pytest

from dihedral_codes import (
    PrimeField,
    check_admissible,
    is_prime,
    multiplicative_order,
    phi_prime_power,
)


def test_construction_rejects_non_prime():
    for bad in (0, 1, 4, 9, 12, 100):
        with pytest.raises(ValueError):
            PrimeField(bad)
    PrimeField(2)
    PrimeField(31)


def test_add_examples():
    F = PrimeField(11)
    assert (F.element(3) + F.element(9)).value == 1
    x = F.element(7)
    assert F.element(0) + x == x
    assert (F.element(10) + F.element(1)).value == 0


def test_mul_examples():
    F = PrimeField(11)
    assert (F.element(4) * F.element(3)).value == 1
    x = F.element(8)
    assert F.element(1) * x == x
    assert (F.element(0) * x).value == 0


def test_inv_examples():
    F = PrimeField(11)
    assert F.element(2).inv().value == 6
    assert F.element(1).inv().value == 1
    assert F.element(4).inv().value == 3
    with pytest.raises(ZeroDivisionError):
        F.element(0).inv()


def test_field_mismatch_raises():
    with pytest.raises(ValueError):
        PrimeField(11).element(1) + PrimeField(13).element(1)
    with pytest.raises(ValueError):
        PrimeField(11).element(1) * PrimeField(13).element(1)


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
def test_field_axioms_exhaustive(q):
    F = PrimeField(q)
    values = F.elements()
    for x in values:
        for y in values:
            assert x + y == y + x
            assert x * y == y * x
            for z in values:
                assert (x + y) + z == x + (y + z)
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z
    for x in values:
        assert x + (-x) == F.zero()
        if x != F.zero():
            assert x * x.inv() == F.one()


def test_pow_and_div():
    F = PrimeField(11)
    assert (F.element(2) ** 5).value == 10
    assert (F.element(2) ** -1).value == 6
    assert (F.element(7) / F.element(7)) == F.one()


def test_multiplicative_order_examples():
    # direct powering oracle
    def brute(q, n):
        k, v = 1, q % n
        while v != 1:
            v = v * q % n
            k += 1
        return k

    assert multiplicative_order(11, 9) == brute(11, 9) == 6
    assert multiplicative_order(2, 7) == brute(2, 7) == 3
    assert multiplicative_order(5, 1) == 1


def test_multiplicative_order_requires_coprime():
    with pytest.raises(ValueError):
        multiplicative_order(6, 9)


def test_order_divides_phi():
    def phi(n):
        return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)

    rng = random.Random(0)
    for _ in range(200):
        n = rng.randrange(2, 200)
        q = rng.randrange(2, 200)
        if gcd(q, n) != 1:
            continue
        assert phi(n) % multiplicative_order(q, n) == 0


def test_check_admissible_examples():
    assert check_admissible(11, 3, 2) is True
    assert check_admissible(7, 3, 2) is False  # ord(7 mod 9) = 3 != 6
    assert check_admissible(3, 3, 1) is False  # gcd(6, 3) != 1
    assert check_admissible(5, 3, 2) is True
    assert check_admissible(3, 5, 2) is True
    assert check_admissible(2, 5, 2) is False  # gcd(50, 2) != 1


def test_check_admissible_validates_shape():
    with pytest.raises(ValueError):
        check_admissible(10, 3, 2)  # q not prime
    with pytest.raises(ValueError):
        check_admissible(11, 2, 2)  # p not odd
    with pytest.raises(ValueError):
        check_admissible(11, 4, 2)  # p not prime
    with pytest.raises(ValueError):
        check_admissible(11, 3, 0)  # m < 1


def test_phi_prime_power():
    assert phi_prime_power(3, 0) == 1
    assert phi_prime_power(3, 1) == 2
    assert phi_prime_power(3, 2) == 6
    assert phi_prime_power(5, 2) == 20


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}
    for n in range(32):
        assert is_prime(n) == (n in primes)
