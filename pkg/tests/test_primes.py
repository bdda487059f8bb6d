"""Segmented sieve, prime counts and Chebyshev psi against sympy/bigint oracles."""

import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quadlcm.errors import InvalidRangeError
from quadlcm.primes import (
    DEFAULT_SEGMENT,
    chebyshev_psi,
    iter_primes,
    pi1_range,
    prime_counts,
    sieve_range,
)
from quadlcm.summation import log_of_bigint


def sympy_primes(lo, hi):
    return tuple(sympy.primerange(lo + 1, hi + 1))


@given(
    st.integers(min_value=0, max_value=50_000),
    st.integers(min_value=0, max_value=3_000),
)
@settings(max_examples=80)
def test_iter_primes_matches_sympy(lo, width):
    hi = lo + width
    assert tuple(iter_primes(lo, hi)) == sympy_primes(lo, hi)


@given(
    st.integers(min_value=0, max_value=100_000),
    st.integers(min_value=0, max_value=2_000),
    st.integers(min_value=0, max_value=2_000),
)
@settings(max_examples=60)
def test_window_seams_are_invisible(lo, w1, w2):
    mid = lo + w1
    hi = mid + w2
    glued = tuple(iter_primes(lo, mid)) + tuple(iter_primes(mid, hi))
    assert glued == tuple(iter_primes(lo, hi))


def test_small_segment_size_changes_nothing():
    want = sympy_primes(0, 10_000)
    assert tuple(iter_primes(0, 10_000, segment=64)) == want
    assert tuple(iter_primes(0, 10_000, segment=DEFAULT_SEGMENT)) == want


def test_iter_primes_rejects_bad_ranges():
    with pytest.raises(InvalidRangeError):
        list(iter_primes(10, 5))
    with pytest.raises(InvalidRangeError):
        list(iter_primes(-1, 10))


def test_sieve_range_block_fields():
    block = sieve_range(0, 30)
    assert block.lo == 0 and block.hi == 30
    assert block.primes == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert block.residue_tags[2] == 2
    assert block.residue_tags[13] == 1
    assert block.residue_tags[23] == 3
    assert set(block.residue_tags) == set(block.primes)


def test_prime_counts_against_sympy():
    for n in (1, 2, 10, 100, 1229, 10_000):
        pc = prime_counts(n)
        assert pc.pi == sympy.primepi(n)
        want1 = sum(1 for p in sympy.primerange(2, n + 1) if p % 4 == 1)
        assert pc.pi1 == want1


def test_pi1_range_windows():
    assert pi1_range(0, 10) == 1  # just 5
    assert pi1_range(10, 30) == 3  # 13, 17, 29
    assert pi1_range(13, 30) == 2  # half-open at the left: 13 excluded, 17, 29
    assert pi1_range(5, 5) == 0


def test_chebyshev_psi_small_values():
    assert chebyshev_psi(1) == 0.0
    assert chebyshev_psi(2) == math.log(2)
    # psi(10) = log lcm(1..10) = log 2520
    assert chebyshev_psi(10) == pytest.approx(math.log(2520), rel=1e-15)


def test_chebyshev_psi_equals_log_lcm_oracle():
    acc = 1
    for n in range(1, 1001):
        acc = math.lcm(acc, n)
    assert chebyshev_psi(1000) == pytest.approx(log_of_bigint(acc), rel=1e-12)


def test_chebyshev_psi_counts_prime_powers_exactly():
    # psi(100) = sum over p^k <= 100 of log p; build it from sympy directly
    total = 0.0
    for p in sympy.primerange(2, 101):
        k = 1
        while p ** (k + 1) <= 100:
            k += 1
        total += k * math.log(p)
    assert chebyshev_psi(100) == pytest.approx(total, rel=1e-14)


def test_psi_near_n_at_scale():
    n = 10**6
    assert chebyshev_psi(n) == pytest.approx(n, rel=2e-3)
