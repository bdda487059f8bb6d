"""Square roots of -1 modulo prime powers: Tonelli-Shanks plus Hensel lifting."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quadlcm.errors import InvalidRangeError, NotOneModFourError, RangeOverflowError
from quadlcm.roots import (
    TWO_ROOT,
    RootPair,
    min_root,
    root_stream,
    roots_mod_prime_power,
    sqrt_minus_one,
)


def test_hand_values():
    assert sqrt_minus_one(5).as_set() == {2, 3}
    assert sqrt_minus_one(13).as_set() == {5, 8}
    assert sqrt_minus_one(17).as_set() == {4, 13}
    assert roots_mod_prime_power(5, 2).as_set() == {7, 18}
    assert roots_mod_prime_power(5, 3).as_set() == {57, 68}
    assert roots_mod_prime_power(13, 2).as_set() == {70, 99}
    assert min_root(5) == 2
    assert min_root(5, 2) == 7
    assert min_root(13, 2) == 70
    assert min_root(2) == 1


def test_pair_structure():
    pair = roots_mod_prime_power(13, 2)
    assert isinstance(pair, RootPair)
    assert pair.nu1 < pair.nu2
    assert pair.nu1 + pair.nu2 == 13**2
    assert (pair.nu1**2 + 1) % 13**2 == 0


def test_rejects_wrong_residue_class():
    for p in (3, 7, 11, 19, 10007):
        with pytest.raises(NotOneModFourError):
            sqrt_minus_one(p)
    with pytest.raises(NotOneModFourError):
        sqrt_minus_one(2)


def test_two_adic_root():
    assert TWO_ROOT.p == 2 and TWO_ROOT.a == 1 and TWO_ROOT.nu == 1
    assert min_root(2, 1) == 1
    with pytest.raises(InvalidRangeError):
        min_root(2, 2)  # x²+1 ≡ 2 mod 4 kills all higher 2-power levels


def test_modulus_overflow_guard():
    with pytest.raises(RangeOverflowError):
        roots_mod_prime_power(5, 40)  # 5^40 > 2^63 - 1


def test_invalid_exponent():
    with pytest.raises(InvalidRangeError):
        roots_mod_prime_power(5, 0)


@st.composite
def prime_one_mod_four(draw):
    # uniform-ish over primes ≡ 1 mod 4 below 10^6
    seed = draw(st.integers(min_value=2, max_value=10**6))
    p = sympy.nextprime(seed)
    while p % 4 != 1:
        p = sympy.nextprime(p)
    return int(p)


@given(prime_one_mod_four())
@settings(max_examples=60)
def test_tonelli_root_is_correct_and_minimal(p):
    pair = sqrt_minus_one(p)
    assert (pair.nu1 * pair.nu1 + 1) % p == 0
    assert 1 <= pair.nu1 < pair.nu2 < p
    assert pair.nu1 + pair.nu2 == p


@given(prime_one_mod_four(), st.integers(min_value=2, max_value=4))
@settings(max_examples=40)
def test_hensel_lift_reduces_to_lower_level(p, a):
    if p**a > (1 << 63) - 1:
        return
    pair = roots_mod_prime_power(p, a)
    below = roots_mod_prime_power(p, a - 1)
    assert (pair.nu1**2 + 1) % p**a == 0
    assert pair.nu1 % p ** (a - 1) in below.as_set()


def test_exhaustive_small_moduli():
    for p in (5, 13, 17, 29, 37, 41):
        pa = p
        for a in (1, 2):
            pa = p**a
            found = sorted(x for x in range(1, pa + 1) if (x * x + 1) % pa == 0)
            pair = roots_mod_prime_power(p, a)
            assert found == [pair.nu1, pair.nu2]


def test_root_stream_contents():
    items = list(root_stream(4, 14))
    assert [(it.p, it.nu) for it in items] == [(5, 2), (5, 3), (13, 5), (13, 8)]
    assert items[0].fraction == Fraction(2, 5)
    assert items[3].fraction == Fraction(8, 13)
    assert [(it.p, it.nu) for it in root_stream(1, 5)] == [(2, 1), (5, 2), (5, 3)]
    assert list(root_stream(5, 12)) == []


def test_root_stream_fraction_in_unit_interval():
    for item in root_stream(1, 500):
        assert 0 < item.fraction < 1
        assert item.fraction.denominator == item.p
