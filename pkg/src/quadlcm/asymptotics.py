"""Mertens-type prime sums, the constant B, and residual analysis.

The leading behavior of log L_n is n log n + B n with

    B = gamma − 1 − (log 2)/2 − S,
    S = Σ over odd primes of chi(p) log p / (p−1),

chi the quadratic character mod 4 (+1 when p ≡ 1, −1 when p ≡ 3).  S is
evaluated two ways: a naive truncation at p_max (converges like 1/log
p_max, so it can never deliver many digits) and an accelerated route
expanding 1/(p−1) into the geometric series Σ_{k≥1} p^(−k), which turns
S into Σ_{k≥1} P_quad(k) with P_quad(k) = Σ_p chi(p) log p · p^(−k).
Each P is recovered top-down
from logarithmic derivatives of zeta and L(·, chi) via the von Mangoldt
identity, with all arguments above 64 dropped and replaced by a rigorous
majorant-tail bound.  Everything high-precision runs in double-word
arithmetic; everything at prime scale runs compensated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DivergentSeriesError, InvalidRangeError
from .dirichlet import neg_log_deriv_l4, neg_log_deriv_zeta
from .orders import log_lcm_exact
from .primes import iter_primes
from .summation import (
    DD,
    DD_ONE,
    GAMMA_DD,
    LN2_DD,
    KahanSum,
    dd_add,
    dd_mul,
    dd_pow_int,
    dd_div,
    dd_from_int,
    dd_sub,
    dd_to_float,
)

CHAR_TRIVIAL = "trivial"
CHAR_PRINCIPAL = "principal-mod-4"
CHAR_QUADRATIC = "quadratic-mod-4"

HALF_LOG2 = 0.5 * math.log(2.0)

# Arguments above this are dropped from the recursion; the dropped mass
# shrinks like 2^(−s) and is accounted for in tail_bound.
_ARGUMENT_CUTOFF = 64


@dataclass(frozen=True)
class PowerSumValue:
    """P_char(s) = Σ_p char(p) log p · p^(−s) in double-word precision."""

    s: int
    char: str
    hi: float
    lo: float
    tail_bound: float

    @property
    def value(self) -> float:
        return self.hi + self.lo


@dataclass(frozen=True)
class ConstantEvaluation:
    """One evaluation of B and the settings that produced it.

    value is the plain-double recombination gamma − 1 − (log 2)/2 − S
    from the stored fields (so the recombination identity holds exactly);
    value_hi/value_lo carry the double-word result where the mode has
    one.  tail_bound covers every truncation made along the way.
    """

    mode: str
    value: float
    value_hi: float
    value_lo: float
    s_value: float
    tail_bound: float
    gamma_used: float
    p_max: int | None = None
    depth: int | None = None


@dataclass(frozen=True)
class ResidualReport:
    """log L_n against its predicted main term n log n + B n.

    eq6_main is the finite-sum intermediate 2n log n − n(1 + (log 2)/2
    + Σ_{2<p≤2n} (1+chi(p)) log p/(p−1)); replacing its two prime sums by
    their limits (Mertens-type and S) turns it into `main`, so
    eq6_vs_closed measures exactly the finite-vs-limit slack.
    """

    n: int
    log_L: float
    main: float
    r: float
    normalized: float
    eq6_main: float
    eq6_vs_exact: float
    eq6_vs_closed: float


def _prime_harmonic_sums(x: int) -> tuple[float, float]:
    """(Σ log p/(p−1), Σ chi(p) log p/(p−1)) over odd primes p ≤ x,
    one sieve pass, compensated, ascending."""
    mert = KahanSum()
    char = KahanSum()
    for p in iter_primes(2, x):
        t = math.log(p) / (p - 1)
        mert.add(t)
        char.add(t if p % 4 == 1 else -t)
    return mert.value, char.value


def mertens_log_sum(x: int) -> float:
    """Σ log p/(p−1) over odd primes p ≤ x; grows like log(x/2) − gamma."""
    if x < 3:
        raise InvalidRangeError("mertens_log_sum needs x >= 3")
    return _prime_harmonic_sums(x)[0]


def character_log_sum(x: int) -> float:
    """Σ chi(p) log p/(p−1) over odd primes p ≤ x; converges as x grows."""
    if x < 3:
        raise InvalidRangeError("character_log_sum needs x >= 3")
    return _prime_harmonic_sums(x)[1]


def _mangoldt_majorant(k: int, odd_only: bool) -> float:
    """Upper bound for Σ_p log p · p^(−k) (p odd when odd_only).

    Compare with Σ_{n≥3} log n · n^(−k) ≤ log3·3^(−k) + ∫_3^∞ log x·x^(−k) dx;
    the integrand decreases on x ≥ 3 > e^(1/(k−1)) for k ≥ 2.
    """
    out = math.log(3.0) * 3.0 ** (-k) + 3.0 ** (1 - k) * (
        math.log(3.0) / (k - 1) + 1.0 / (k - 1) ** 2
    )
    if not odd_only:
        out += math.log(2.0) * 2.0 ** (-k)
    return out


def _dropped_args_bound(first_arg: int, step: int, odd_only: bool) -> float:
    # majorant shrinks at least by 3^(−step) (2^(−step) with p=2 present)
    # per step, so a geometric sum caps the whole dropped family
    ratio = (3.0 if odd_only else 2.0) ** (-step)
    return _mangoldt_majorant(first_arg, odd_only) / (1.0 - ratio)


@lru_cache(maxsize=None)
def _power_sum_dd(char: str, s: int) -> tuple[float, float, float]:
    """(hi, lo, tail_bound) for P_char(s) by the top-down recursion."""
    if char == CHAR_TRIVIAL:
        if s < 2:
            raise DivergentSeriesError(
                "Σ log p/p^s diverges at s = 1 for the trivial character"
            )
        val, bound = neg_log_deriv_zeta(s)
        m = 2
        while m * s <= _ARGUMENT_CUTOFF:
            sub = _power_sum_dd(CHAR_TRIVIAL, m * s)
            val = dd_sub(val, (sub[0], sub[1]))
            bound += sub[2]
            m += 1
        bound += _dropped_args_bound(m * s, s, odd_only=False)
        return val[0], val[1], bound
    if char == CHAR_PRINCIPAL:
        if s < 2:
            raise DivergentSeriesError(
                "Σ log p/p^s over odd p diverges at s = 1"
            )
        hi, lo, bound = _power_sum_dd(CHAR_TRIVIAL, s)
        two_term = dd_mul(LN2_DD, dd_pow_int(dd_div(DD_ONE, dd_from_int(2)), s))
        val = dd_sub((hi, lo), two_term)
        return val[0], val[1], bound
    if char == CHAR_QUADRATIC:
        if s < 1:
            raise InvalidRangeError("quadratic-character power sum needs s >= 1")
        val, bound = neg_log_deriv_l4(s)
        m = 2
        while m * s <= _ARGUMENT_CUTOFF:
            # chi^m is chi again for odd m and the principal character for
            # even m, so the von Mangoldt expansion alternates the two
            sub_char = CHAR_QUADRATIC if m % 2 else CHAR_PRINCIPAL
            sub = _power_sum_dd(sub_char, m * s)
            val = dd_sub(val, (sub[0], sub[1]))
            bound += sub[2]
            m += 1
        bound += _dropped_args_bound(m * s, s, odd_only=True)
        return val[0], val[1], bound
    raise InvalidRangeError(
        f"unknown character {char!r}; expected one of "
        f"{CHAR_TRIVIAL!r}, {CHAR_PRINCIPAL!r}, {CHAR_QUADRATIC!r}"
    )


def prime_log_power_sum(s: int, char: str = CHAR_TRIVIAL) -> PowerSumValue:
    """Σ_p char(p) log p · p^(−s); s ≥ 2 unless the character is quadratic."""
    hi, lo, bound = _power_sum_dd(char, s)
    return PowerSumValue(s=s, char=char, hi=hi, lo=lo, tail_bound=bound)


def _recombine(gamma_used: float, s_value: float) -> float:
    # canonical plain-double expression; tests reconstruct it verbatim
    return gamma_used - 1.0 - HALF_LOG2 - s_value


def _b_from_s_dd(s_dd: DD) -> DD:
    half_ln2 = (0.5 * LN2_DD[0], 0.5 * LN2_DD[1])
    out = dd_sub(GAMMA_DD, DD_ONE)
    out = dd_sub(out, half_ln2)
    return dd_sub(out, s_dd)


@lru_cache(maxsize=None)
def _accelerated_b(depth: int) -> ConstantEvaluation:
    s_dd: DD = (0.0, 0.0)
    bound = 0.0
    for k in range(1, depth + 1):
        hi, lo, b = _power_sum_dd(CHAR_QUADRATIC, k)
        s_dd = dd_add(s_dd, (hi, lo))
        bound += b
    # |P_quad(k)| ≤ odd majorant(k); geometric from depth+1 on
    bound += _dropped_args_bound(depth + 1, 1, odd_only=True)
    b_dd = _b_from_s_dd(s_dd)
    gamma_used = GAMMA_DD[0] + GAMMA_DD[1]
    s_value = dd_to_float(s_dd)
    return ConstantEvaluation(
        mode="accelerated",
        value=_recombine(gamma_used, s_value),
        value_hi=b_dd[0],
        value_lo=b_dd[1],
        s_value=s_value,
        tail_bound=bound,
        gamma_used=gamma_used,
        depth=depth,
    )


def compute_B(
    mode: str = "accelerated", *, p_max: int = 10**6, depth: int = 48
) -> ConstantEvaluation:
    """Evaluate B = gamma − 1 − (log 2)/2 − S.

    naive mode truncates the defining character sum at p_max (tail_bound
    is the calibrated envelope 3/log p_max of a PNT-type tail); the
    accelerated mode sums P_quad(1..depth) with rigorous majorant tails
    and is good to roughly double-word resolution by depth 48.
    """
    if mode == "accelerated":
        if depth < 16:
            raise InvalidRangeError("accelerated mode needs depth >= 16")
        return _accelerated_b(depth)
    if mode == "naive":
        if p_max < 10**3:
            raise InvalidRangeError("naive mode needs p_max >= 10^3")
        s_value = character_log_sum(p_max)
        gamma_used = GAMMA_DD[0] + GAMMA_DD[1]
        b_dd = _b_from_s_dd((s_value, 0.0))
        return ConstantEvaluation(
            mode="naive",
            value=_recombine(gamma_used, s_value),
            value_hi=b_dd[0],
            value_lo=b_dd[1],
            s_value=s_value,
            tail_bound=3.0 / math.log(p_max),
            gamma_used=gamma_used,
            p_max=p_max,
        )
    raise InvalidRangeError(f"unknown mode {mode!r}; use 'naive' or 'accelerated'")


def residual_scan(
    grid: list[int], theta: float = 0.44, workers: int = 1
) -> list[ResidualReport]:
    """r(n) = log L_n − (n log n + B n) along a grid, with the finite
    Eq.-style intermediate for comparison.

    normalized is r · (log n)^theta / n; theta must sit strictly inside
    (0, 4/9), default just under the top.
    """
    if not grid:
        raise InvalidRangeError("empty grid")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidRangeError("grid must be strictly ascending")
    if any(n < 1 for n in grid):
        raise InvalidRangeError("grid entries must be at least 1")
    if not 0.0 < theta < 4.0 / 9.0:
        raise InvalidRangeError("theta must lie strictly inside (0, 4/9)")
    b_value = compute_B("accelerated").value
    out: list[ResidualReport] = []
    for n in grid:
        ev = log_lcm_exact(n, workers=workers)
        logn = math.log(n)
        main = n * logn + b_value * n
        r = ev.log_L - main
        normalized = r * logn**theta / n if n > 1 else 0.0
        if 2 * n >= 3:
            mert, char = _prime_harmonic_sums(2 * n)
        else:
            mert, char = 0.0, 0.0
        eq6_main = 2 * n * logn - n * (1.0 + HALF_LOG2 + mert + char)
        out.append(
            ResidualReport(
                n=n,
                log_L=ev.log_L,
                main=main,
                r=r,
                normalized=normalized,
                eq6_main=eq6_main,
                eq6_vs_exact=eq6_main - ev.log_L,
                eq6_vs_closed=eq6_main - main,
            )
        )
    return out
