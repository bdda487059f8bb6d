"""Segmented prime generation, residue-class counting, Chebyshev psi.

All windows use the half-open convention (lo, hi]: a prime p belongs to the
window when lo < p <= hi.  Segment size is measured in integers; the sieve
itself walks odd residues only, so the working set per segment is half the
nominal window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidRangeError
from .summation import KahanSum

# 2^21 integers (2^20 odd residues) per segment: fits L2 cache comfortably.
DEFAULT_SEGMENT = 1 << 21


@dataclass(frozen=True)
class PrimeBlock:
    """Primes in a half-open window (lo, hi] with their classes mod 4."""

    lo: int
    hi: int
    primes: tuple[int, ...]
    residue_tags: dict[int, int]


@dataclass(frozen=True)
class PrimeCounts:
    n: int
    pi: int
    pi1: int


@lru_cache(maxsize=32)
def _small_primes(limit: int) -> tuple[int, ...]:
    """All primes <= limit by a dense odd-only sieve; used for base primes."""
    if limit < 2:
        return ()
    if limit < 3:
        return (2,)
    size = (limit - 1) // 2  # index i <-> odd number 2i+1, i >= 1
    comp = bytearray(size + 1)
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if not comp[i]:
            p = 2 * i + 1
            first = (p * p - 1) // 2
            count = (size - first) // p + 1
            comp[first :: p] = b"\x01" * count
    return (2,) + tuple(2 * i + 1 for i in range(1, size + 1) if not comp[i])


def _sieve_window(lo: int, hi: int, base: tuple[int, ...]) -> Iterator[int]:
    """Yield primes in (lo, hi] given base primes covering sqrt(hi)."""
    if hi < 2 or hi <= lo:
        return
    if lo < 2 <= hi:
        yield 2
    first = max(lo + 1, 3)
    if first % 2 == 0:
        first += 1
    if first > hi:
        return
    size = (hi - first) // 2 + 1  # odd numbers first, first+2, ..., <= hi
    comp = bytearray(size)
    for p in base:
        if p == 2:
            continue
        if p * p > hi:
            break
        start = max(p * p, ((lo // p) + 1) * p)
        if start % 2 == 0:
            start += p
        if start > hi:
            continue
        idx = (start - first) // 2
        count = (size - idx + p - 1) // p
        comp[idx::p] = b"\x01" * count
    for i in range(size):
        if not comp[i]:
            yield first + 2 * i


def iter_primes(lo: int, hi: int, segment: int = DEFAULT_SEGMENT) -> Iterator[int]:
    """Stream primes in (lo, hi] in ascending order, one segment at a time."""
    if hi < lo:
        raise InvalidRangeError(f"empty window: ({lo}, {hi}]")
    if lo < 0:
        raise InvalidRangeError("window must start at a non-negative bound")
    if hi <= 1:
        return
    base = _small_primes(math.isqrt(hi))
    cur = lo
    while cur < hi:
        top = min(cur + segment, hi)
        yield from _sieve_window(cur, top, base)
        cur = top


def sieve_range(lo: int, hi: int, segment: int = DEFAULT_SEGMENT) -> PrimeBlock:
    """Materialize the primes in (lo, hi] together with residue tags mod 4.

    The tag is p mod 4 for odd p (so 1 or 3) and the literal 2 for p = 2.
    """
    primes = tuple(iter_primes(lo, hi, segment))
    tags = {p: (2 if p == 2 else p % 4) for p in primes}
    return PrimeBlock(lo=lo, hi=hi, primes=primes, residue_tags=tags)


def prime_counts(n: int) -> PrimeCounts:
    """Exact pi(n) and pi1(n) = |{p <= n : p = 1 mod 4}|."""
    if n < 0:
        raise InvalidRangeError("prime counting needs n >= 0")
    pi = 0
    pi1 = 0
    for p in iter_primes(0, n):
        pi += 1
        if p % 4 == 1:
            pi1 += 1
    return PrimeCounts(n=n, pi=pi, pi1=pi1)


def pi1_range(a: int, b: int) -> int:
    """Count primes p = 1 mod 4 with a < p <= b."""
    if b < a:
        raise InvalidRangeError(f"empty window: ({a}, {b}]")
    return sum(1 for p in iter_primes(a, b) if p % 4 == 1)


def chebyshev_psi(n: int) -> float:
    """psi(n) = sum of log p over prime powers p^m <= n.

    Exponents are found by exact integer multiplication (a floating
    log-ratio can misround just below a perfect power).  Terms accumulate
    in ascending prime order through a compensated sum.
    """
    if n < 1:
        raise InvalidRangeError("chebyshev_psi needs n >= 1")
    acc = KahanSum()
    root = math.isqrt(n)
    for p in iter_primes(0, n):
        if p > root:
            acc.add(math.log(p))
            continue
        power = p
        k = 1
        while power <= n // p:
            power *= p
            k += 1
        acc.add(k * math.log(p))
    return acc.value
