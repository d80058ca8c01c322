import math

import numpy as np
import pytest

from qspectra.combinatorics import (
    Distribution,
    Partition,
    asymptotic_leading,
    asymptotic_remainder,
    generalized_harmonic,
    q_factorial,
    q_factorial_log,
    q_multinomial_log,
    tsallis_entropy,
)
from qspectra.errors import DomainError


def test_partition_validation():
    part = Partition(6, (1, 2, 3))
    assert part.ratios() == (1 / 6, 2 / 6, 3 / 6)
    assert Partition.from_parts([4, 4]).n == 8
    with pytest.raises(DomainError):
        Partition(5, (1, 2, 3))
    with pytest.raises(DomainError):
        Partition(3, (3, 0))
    with pytest.raises(DomainError):
        Partition(0, ())


def test_distribution_validation():
    Distribution((0.25, 0.75))
    Distribution((1.0, 0.0))
    with pytest.raises(DomainError):
        Distribution((0.5, 0.6))
    with pytest.raises(DomainError):
        Distribution((-0.1, 1.1))


def test_generalized_harmonic():
    assert generalized_harmonic(4, 1.0) == 10.0
    assert generalized_harmonic(1, 3.7) == 1.0
    n = 30
    assert generalized_harmonic(n, 2.0) == pytest.approx(
        n * (n + 1) * (2 * n + 1) / 6, rel=1e-15
    )
    assert generalized_harmonic(100, 0.0) == 100.0
    with pytest.raises(DomainError):
        generalized_harmonic(0, 1.0)


def test_q_factorial_log_classical_is_lgamma():
    for n in (1, 2, 5, 40):
        assert q_factorial_log(n, 1.0) == math.lgamma(n + 1)


def test_q_factorial_log_frozen_oracles():
    # sum_{k<=n} ln_q k recomputed as raw power sums at 40 digits
    assert q_factorial_log(10, 0.5) == pytest.approx(24.9365563724082, rel=1e-14)
    assert q_factorial_log(7, 2.0) == pytest.approx(4.4071428571428575, rel=1e-14)
    # q = 0: sum (k - 1) = n(n-1)/2
    assert q_factorial_log(9, 0.0) == pytest.approx(36.0, rel=1e-14)


def test_q_factorial_small_values():
    assert q_factorial(3, 1.0).value == pytest.approx(6.0, rel=1e-12)
    res = q_factorial(4, 0.0)  # exp_0(u) = 1 + u, u = 0+1+2+3
    assert res.value == pytest.approx(7.0, rel=1e-15)
    assert not res.clamped


def test_q_multinomial_log_classical_matches_binomial():
    part = Partition(10, (4, 6))
    assert q_multinomial_log(part, 1.0) == pytest.approx(
        math.log(math.comb(10, 4)), rel=1e-13
    )


def test_q_multinomial_log_frozen_oracle():
    value = q_multinomial_log(Partition(10, (3, 3, 4)), 1.5)
    assert value == pytest.approx(4.664746503671707, rel=1e-14)


def test_q_multinomial_accepts_raw_parts():
    assert q_multinomial_log((3, 3, 4), 1.5) == q_multinomial_log(
        Partition(10, (3, 3, 4)), 1.5
    )


def test_q_multinomial_equals_power_sum_difference():
    """Independent route: (H(n,1-q) - n - sum_i (H(n_i,1-q) - n_i)) / (1-q)."""
    for q in (0.0, 0.5, 1.5, 2.5):
        r = 1.0 - q
        for parts in ((2, 2), (1, 2, 3), (5, 5, 5), (10, 20, 30)):
            part = Partition.from_parts(parts)
            direct = q_multinomial_log(part, q)
            ref = (
                generalized_harmonic(part.n, r)
                - math.fsum(generalized_harmonic(ni, r) for ni in part.parts)
            ) / r
            assert direct == pytest.approx(ref, abs=1e-12 * max(1.0, abs(ref)))


def test_integer_multinomial_oracle_small():
    def partitions(total, largest):
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in partitions(total - first, first):
                yield (first,) + rest

    for n in range(1, 9):
        for parts in partitions(n, n):
            exact = math.factorial(n)
            for ni in parts:
                exact //= math.factorial(ni)
            log_val = q_multinomial_log(Partition(n, parts), 1.0)
            assert math.exp(log_val) == pytest.approx(exact, rel=1e-12)


def test_tsallis_entropy_values():
    assert tsallis_entropy((0.5, 0.5), 2.0) == pytest.approx(0.5, rel=1e-15)
    assert tsallis_entropy((0.5, 0.5), 0.0) == pytest.approx(1.0, rel=1e-15)
    assert tsallis_entropy((0.25,) * 4, 2.0) == pytest.approx(0.75, rel=1e-15)
    assert tsallis_entropy((0.5, 0.5), 1.0) == pytest.approx(math.log(2), rel=1e-15)
    assert tsallis_entropy((0.2, 0.3, 0.5), 1.5) == pytest.approx(
        0.7853742461103697, rel=1e-14
    )


def test_tsallis_entropy_zero_entries_drop_out():
    assert tsallis_entropy((1.0, 0.0), 0.5) == 0.0
    assert tsallis_entropy((0.5, 0.5, 0.0), 2.0) == tsallis_entropy((0.5, 0.5), 2.0)


def test_tsallis_entropy_certain_outcome_is_zero():
    for q in (0.0, 0.5, 1.0, 2.0, 3.0):
        assert tsallis_entropy((1.0,), q) == 0.0


def test_tsallis_shannon_limit():
    p = (0.2, 0.3, 0.5)
    shannon = tsallis_entropy(p, 1.0)
    errs = [abs(tsallis_entropy(p, 1.0 + 1e-2 * 2.0**-k) - shannon) for k in range(8)]
    for finer, coarser in zip(errs[1:], errs[:-1]):
        assert finer <= 0.625 * coarser


def test_asymptotic_leading_values():
    # q = 0: n^2/2 * H_2(p), and H_2((1/2,1/2)) = 1/2
    assert asymptotic_leading(100, (0.5, 0.5), 0.0) == pytest.approx(2500.0, rel=1e-13)
    with pytest.raises(DomainError):
        asymptotic_leading(100, (0.5, 0.5), 2.0)
    with pytest.raises(DomainError):
        asymptotic_leading(0, (0.5, 0.5), 0.5)


def test_asymptotic_remainder_exact_at_q0():
    rng = np.random.default_rng(3)
    for _ in range(25):
        n = int(rng.integers(10, 10_001))
        m = int(rng.integers(2, 7))
        parts = rng.multinomial(n - m, np.full(m, 1.0 / m)) + 1
        part = Partition(n, tuple(int(v) for v in parts))
        lead = asymptotic_leading(part.n, part.ratios(), 0.0)
        assert abs(asymptotic_remainder(part, 0.0)) <= 1e-9 * max(1.0, abs(lead))


@pytest.mark.parametrize(
    "q,bound",
    [(0.5, 0.65), (1.0, 0.15)],
)
def test_remainder_slope_below_one_minus_q(q, bound):
    """|remainder| ~ n^(1-q) for q <= 1: fitted log-log slope stays under
    (1-q) + 0.15 for the balanced two-part family."""
    ns = [2**k for k in range(6, 15)]
    lx, ly = [], []
    for n in ns:
        rem = asymptotic_remainder(Partition(n, (n // 2, n // 2)), q)
        lx.append(math.log(n))
        ly.append(math.log(abs(rem)))
    slope = float(np.polyfit(lx, ly, 1)[0])
    assert slope <= bound


def test_remainder_approaches_zeta_constant_above_q1():
    # at q = 1.5 the remainder converges to zeta(1/2)/(1/2), not to zero
    limit = -1.4603545088095868 / 0.5
    rem_small = asymptotic_remainder(Partition(2**8, (2**7, 2**7)), 1.5)
    rem_large = asymptotic_remainder(Partition(2**14, (2**13, 2**13)), 1.5)
    assert abs(rem_large - limit) < abs(rem_small - limit)
    assert rem_large == pytest.approx(limit, abs=2e-2)
