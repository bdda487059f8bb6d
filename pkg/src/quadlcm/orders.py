"""Exact p-adic orders for the sequence i²+1 and the log-lcm decomposition.

Notation used throughout: for a prime p and bound n,

* alpha(p, n) is the order of p in the product of i²+1 over i ≤ n,
* beta(p, n) is the order of p in lcm(i²+1 : i ≤ n),
* alpha_star(p, n) counts i ≤ n with p | i²+1,
* beta_star(p, n) is the 0/1 indicator that some i ≤ n has p | i²+1
  (only p = 2 and p ≡ 1 mod 4 can score).

The central computational fact: alpha = beta for every prime p > 2n, so

    log L_n = log P_n − Σ_{p ≤ 2n} (alpha − beta) log p

is exact, and the right side costs one sieve pass plus one root computation
per prime instead of factoring n quadratic values.

Primes split at the exact integer boundary p³ < n² ("small", below n^(2/3))
versus p³ ≥ n² ("medium", up to 2n).  The medium correction decomposes
per prime as (alpha − beta) = (alpha − alpha_star) − (beta − beta_star)
+ (alpha_star − beta_star); the report tracks each piece separately along
with an exact integer residual of that rearrangement (always 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Sequence

from .errors import InvalidRangeError, OracleCapError
from .primes import DEFAULT_SEGMENT, iter_primes
from .roots import _lifted_root, roots_mod_prime_power
from .summation import KahanSum, log_of_bigint

ORACLE_CAP_DEFAULT = 5_000

_LOGP_CHUNK = 1 << 20


@dataclass(frozen=True)
class OrderProfile:
    """All four exact orders of one prime at one bound."""

    p: int
    n: int
    alpha: int
    beta: int
    alpha_star: int
    beta_star: int


@dataclass(frozen=True)
class LcmEvaluation:
    """Exact log L_n together with the pieces it was assembled from.

    correction includes the p = 2 term, which is also broken out as
    two_term; log_L equals log_P − correction by construction.
    """

    n: int
    log_P: float
    log_L: float
    correction: float
    two_term: float


@dataclass(frozen=True)
class DecompositionReport:
    """Per-range pieces of the correction Σ (alpha − beta) log p.

    small_sum covers 2 < p < n^(2/3); the remaining fields cover the
    medium window n^(2/3) ≤ p ≤ 2n, where the per-prime coefficient is
    rearranged as (beta − beta_star − alpha + alpha_star) + beta_star
    − alpha_star.  identity_residue is the summed absolute integer
    mismatch of that rearrangement (an algebraic identity, so 0).

    beta_star_reference = n and alpha_star_reference
    = Σ_medium 2 n log p / (p − 1) are the first-order predictions the
    two starred sums are measured against.
    """

    n: int
    small_sum: float
    medium_high_sum: float
    beta_star_sum: float
    alpha_star_sum: float
    two_correction: float
    bad_primes: tuple[int, ...]
    beta_star_reference: float
    alpha_star_reference: float
    identity_residue: int


def count_solutions_upto(p: int, a: int, n: int) -> int:
    """|{1 ≤ i ≤ n : p^a divides i²+1}| for p ≡ 1 mod 4.

    With roots nu1 < nu2 of x² ≡ −1 mod p^a, the solutions ≤ n are
    nu1, nu2 and their translates by multiples of p^a, giving
    2 + ⌊(n−nu1)/p^a⌋ + ⌊(n−nu2)/p^a⌋ where the floor rounds toward −∞
    (each floor is −1 when the root itself exceeds n).  The formula
    returns 0 on its own once p^a > n²+1.
    """
    if n < 1:
        raise InvalidRangeError("count_solutions_upto needs n >= 1")
    pair = roots_mod_prime_power(p, a)
    pa = p**a
    return 2 + (n - pair.nu1) // pa + (n - pair.nu2) // pa


def _order_counts(p: int, n: int) -> tuple[int, int, int]:
    """(alpha, beta, alpha_star) for p ≡ 1 mod 4 by per-level root counts.

    Divisibility levels fill contiguously: if no i ≤ n has p^a | i²+1
    then no higher power divides any i²+1 with i ≤ n either, so the scan
    stops at the first empty level.
    """
    limit = n * n + 1
    alpha = 0
    beta = 0
    alpha_star = 0
    pa = p
    a = 1
    while pa <= limit:
        nu = _lifted_root(p, a)
        c = 2 + (n - nu) // pa + (n - (pa - nu)) // pa
        if c == 0:
            break
        alpha += c
        beta = a
        if a == 1:
            alpha_star = c
        a += 1
        pa *= p
    return alpha, beta, alpha_star


def alpha_exact(p: int, n: int) -> int:
    """Order of p in the product of i²+1 over 1 ≤ i ≤ n."""
    if n < 1:
        raise InvalidRangeError("alpha_exact needs n >= 1")
    if p == 2:
        # exactly the odd i contribute, each a single factor of 2
        return (n + 1) // 2
    if p % 4 == 3:
        return 0
    return _order_counts(p, n)[0]


def beta_exact(p: int, n: int) -> int:
    """Order of p in lcm(i²+1 : 1 ≤ i ≤ n): the largest a whose smallest
    root does not exceed n."""
    if n < 1:
        raise InvalidRangeError("beta_exact needs n >= 1")
    if p == 2:
        return 1
    if p % 4 == 3:
        return 0
    return _order_counts(p, n)[1]


def alpha_star(p: int, n: int) -> int:
    """Count of i ≤ n with p | i²+1."""
    if n < 1:
        raise InvalidRangeError("alpha_star needs n >= 1")
    if p == 2:
        return (n + 1) // 2
    if p % 4 == 3:
        return 0
    return count_solutions_upto(p, 1, n)


def beta_star(p: int, n: int) -> int:
    """1 when p admits a root and some i ≤ n realizes it, else 0."""
    if p == 2 or p % 4 == 1:
        return 1 if alpha_star(p, n) >= 1 else 0
    return 0


def order_profile(p: int, n: int) -> OrderProfile:
    if n < 1:
        raise InvalidRangeError("order_profile needs n >= 1")
    if p == 2:
        odd = (n + 1) // 2
        return OrderProfile(p=2, n=n, alpha=odd, beta=1, alpha_star=odd, beta_star=1)
    if p % 4 == 3:
        return OrderProfile(p=p, n=n, alpha=0, beta=0, alpha_star=0, beta_star=0)
    alpha, beta, a_st = _order_counts(p, n)
    return OrderProfile(
        p=p, n=n, alpha=alpha, beta=beta, alpha_star=a_st, beta_star=1 if a_st else 0
    )


def _map_blocks(fn: Callable, blocks: Sequence, workers: int) -> list:
    """Map over fixed blocks, reducing in ascending block order.

    Block boundaries never depend on the worker count, and each block is
    summed exactly on its own, so the reduced result is bit-identical
    whether computed serially or on a pool.
    """
    if workers <= 1 or len(blocks) <= 1:
        return [fn(b) for b in blocks]
    with Pool(processes=min(workers, len(blocks))) as pool:
        return list(pool.imap(fn, blocks, chunksize=1))


def _logp_block(bounds: tuple[int, int]) -> float:
    lo, hi = bounds
    return math.fsum(math.log(i * i + 1) for i in range(lo, hi + 1))


def log_P(n: int, workers: int = 1) -> float:
    """Σ_{i ≤ n} log(i²+1), exact per block, blocks reduced in order."""
    if n < 1:
        raise InvalidRangeError("log_P needs n >= 1")
    blocks = [(k + 1, min(k + _LOGP_CHUNK, n)) for k in range(0, n, _LOGP_CHUNK)]
    acc = KahanSum()
    for part in _map_blocks(_logp_block, blocks, workers):
        acc.add(part)
    return acc.value


def _prime_block_task(args: tuple[int, int, int]):
    """Accumulate every per-prime sum over primes in one window (lo, hi].

    Returns (correction, small_sum, medium_high, beta_star_sum,
    alpha_star_sum, alpha_star_reference, identity_residue, bad_primes).
    Only p ≡ 1 mod 4 contribute; the quadratic-character weight in the
    alpha_star reference kills p ≡ 3 mod 4 and p = 2 is the caller's.
    """
    lo, hi, n = args
    nn = n * n
    corr: list[float] = []
    small: list[float] = []
    medhigh: list[float] = []
    bstar: list[float] = []
    astar: list[float] = []
    aref: list[float] = []
    identity = 0
    bad: list[int] = []
    for p in iter_primes(lo, hi):
        if p % 4 != 1:
            continue
        alpha, beta, a_st = _order_counts(p, n)
        lp = math.log(p)
        diff = alpha - beta
        if diff:
            corr.append(diff * lp)
        if p * p * p < nn:
            if diff:
                small.append(diff * lp)
        else:
            b_st = 1 if a_st else 0
            medhigh.append((beta - b_st - alpha + a_st) * lp)
            bstar.append(b_st * lp)
            astar.append(a_st * lp)
            aref.append(2.0 * n * lp / (p - 1))
            identity += abs((beta - alpha) - ((beta - b_st - alpha + a_st) + b_st - a_st))
            if beta >= 2:
                bad.append(p)
    return (
        math.fsum(corr),
        math.fsum(small),
        math.fsum(medhigh),
        math.fsum(bstar),
        math.fsum(astar),
        math.fsum(aref),
        identity,
        bad,
    )


def _correction_partials(n: int, workers: int) -> list:
    hi = 2 * n
    blocks = [
        (k, min(k + DEFAULT_SEGMENT, hi), n) for k in range(0, hi, DEFAULT_SEGMENT)
    ]
    return _map_blocks(_prime_block_task, blocks, workers)


def _two_term(n: int) -> float:
    # alpha − beta at p = 2 is ⌈n/2⌉ − 1 exactly
    return ((n + 1) // 2 - 1) * math.log(2.0)


def log_lcm_exact(n: int, workers: int = 1) -> LcmEvaluation:
    """Exact log L_n via the p ≤ 2n correction; never an asymptotic."""
    if n < 1:
        raise InvalidRangeError("log_lcm_exact needs n >= 1")
    logp = log_P(n, workers)
    two = _two_term(n)
    acc = KahanSum()
    acc.add(two)
    for part in _correction_partials(n, workers):
        acc.add(part[0])
    correction = acc.value
    return LcmEvaluation(
        n=n, log_P=logp, log_L=logp - correction, correction=correction, two_term=two
    )


def log_lcm_bruteforce(n: int, cap: int = ORACLE_CAP_DEFAULT) -> float:
    """Independent oracle: log of the exact big-integer lcm.

    Quadratic-time in n, hence capped; raises OracleCapError past the cap
    rather than silently grinding.
    """
    if n < 1:
        raise InvalidRangeError("log_lcm_bruteforce needs n >= 1")
    if n > cap:
        raise OracleCapError(
            f"exact-integer oracle capped at n = {cap}, got n = {n}"
        )
    acc = 1
    for i in range(1, n + 1):
        acc = math.lcm(acc, i * i + 1)
    return log_of_bigint(acc)


def square_divisor_primes(n: int) -> list[int]:
    """Medium-window primes whose square divides some i²+1 with i ≤ n.

    These are exactly the p ≡ 1 mod 4 with n^(2/3) ≤ p ≤ 2n whose
    smallest level-2 root is ≤ n; ascending.  Primes above sqrt(n²+1)
    are skipped outright since p² cannot divide any i²+1 then.
    """
    if n < 1:
        raise InvalidRangeError("square_divisor_primes needs n >= 1")
    nn = n * n
    out: list[int] = []
    for p in iter_primes(1, 2 * n):
        if p % 4 != 1 or p * p * p < nn:
            continue
        if p * p > nn + 1:
            continue
        if _lifted_root(p, 2) <= n:
            out.append(p)
    return out


def decomposition_report(n: int, workers: int = 1) -> DecompositionReport:
    """All named pieces of the correction, split at the small/medium boundary."""
    if n < 2:
        raise InvalidRangeError("decomposition_report needs n >= 2")
    parts = _correction_partials(n, workers)
    small = KahanSum()
    medhigh = KahanSum()
    bstar = KahanSum()
    astar = KahanSum()
    aref = KahanSum()
    identity = 0
    bad: list[int] = []
    for part in parts:
        small.add(part[1])
        medhigh.add(part[2])
        bstar.add(part[3])
        astar.add(part[4])
        aref.add(part[5])
        identity += part[6]
        bad.extend(part[7])
    return DecompositionReport(
        n=n,
        small_sum=small.value,
        medium_high_sum=medhigh.value,
        beta_star_sum=bstar.value,
        alpha_star_sum=astar.value,
        two_correction=_two_term(n),
        bad_primes=tuple(bad),
        beta_star_reference=float(n),
        alpha_star_reference=aref.value,
        identity_residue=identity,
    )
