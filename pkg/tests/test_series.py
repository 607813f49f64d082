"""Tests for EGF arithmetic and the three reversion paths.

The composition oracle here works in ordinary normalization with plain
truncated polynomial substitution, independent of the Bell-polynomial
machinery inside the library.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

import pytest

from mspkit import series
from mspkit.series import EgfCoeffs, TPoly

F = Fraction


def egf(*values) -> EgfCoeffs:
    return EgfCoeffs(tuple(F(v) for v in values))


# ---------------------------------------------------------------------------
# oracle: composition by direct truncated substitution
# ---------------------------------------------------------------------------


def compose_oracle(f: EgfCoeffs, g: EgfCoeffs, order: int) -> tuple[Fraction, ...]:
    a = [F(0)] + [f.f(n) / factorial(n) for n in range(1, order + 1)]
    b = [F(0)] + [g.f(n) / factorial(n) for n in range(1, order + 1)]

    def mul(p, q):
        out = [F(0)] * (order + 1)
        for i, pi in enumerate(p):
            if pi:
                for j in range(min(order - i, len(q) - 1) + 1):
                    out[i + j] += pi * q[j]
        return out

    total = [F(0)] * (order + 1)
    power = [F(1)] + [F(0)] * order
    for m in range(1, order + 1):
        power = mul(power, b)
        if a[m]:
            for i in range(order + 1):
                total[i] += a[m] * power[i]
    return tuple(total[n] * factorial(n) for n in range(1, order + 1))


def random_egf(rng: random.Random, order: int) -> EgfCoeffs:
    coeffs = []
    for n in range(1, order + 1):
        num = rng.randint(-99, 99)
        if n == 1:
            while num == 0:
                num = rng.randint(-99, 99)
        coeffs.append(F(num, rng.randint(1, 20)))
    return EgfCoeffs(tuple(coeffs))


# ---------------------------------------------------------------------------
# types
# ---------------------------------------------------------------------------


def test_egf_validation():
    with pytest.raises(ValueError):
        EgfCoeffs(())
    with pytest.raises(ValueError):
        egf(0, 1)
    f = egf(1, 2, 3)
    assert f.order == 3
    assert f.f(0) == 0 and f.f(2) == 2 and f.f(9) == 0
    assert f.truncate(5).coeffs == (F(1), F(2), F(3), F(0), F(0))


def test_tpoly():
    p = TPoly((F(0), F(2), F(-3), F(1)))
    assert str(p) == "2*t - 3*t^2 + t^3"
    assert p.evaluate(1) == 0
    assert p.evaluate(2) == 2 * 2 - 3 * 4 + 8
    assert TPoly((F(0), F(0))).coeffs == ()
    assert str(TPoly(())) == "0"
    assert p.coefficient(1) == 2 and p.coefficient(9) == 0


# ---------------------------------------------------------------------------
# product and composition
# ---------------------------------------------------------------------------


def test_egf_product_exp_squared():
    ones = [F(1)] * 9  # e^x including the constant term
    got = series.egf_product(ones, ones, 8)
    assert got == tuple(F(2) ** n for n in range(9))


def test_egf_product_identity():
    f = [F(0), F(3), F(-1), F(5)]
    one = [F(1)]
    assert series.egf_product(f, one, 3) == tuple(f)


def test_egf_product_exp_minus_one_squared():
    f = [F(0)] + [F(1)] * 8  # e^x - 1
    got = series.egf_product(f, f, 8)
    assert got[0] == 0 and got[1] == 0
    assert all(got[n] == 2**n - 2 for n in range(1, 9))


def test_compose_with_identity():
    f = egf(1, -2, 3, 7)
    ident = series.identity_egf(4)
    assert series.egf_compose(f, ident) == f
    assert series.egf_compose(ident, f) == f


def test_compose_exp_example():
    ones = egf(1, 1, 1)
    got = series.egf_compose(ones, ones)
    # third coefficient of (e^x - 1) o (e^x - 1): B(3,1)+B(3,2)+B(3,3) at ones
    assert got.f(3) == 1 + 3 + 1
    assert got.coeffs == compose_oracle(ones, ones, 3)


def test_compose_matches_oracle_random():
    rng = random.Random("compose-oracle")
    for _ in range(25):
        f = random_egf(rng, 8)
        g = random_egf(rng, 8)
        assert series.egf_compose(f, g).coeffs == compose_oracle(f, g, 8)


def test_compose_revert_gives_identity():
    rng = random.Random("compose-revert")
    for _ in range(20):
        f = random_egf(rng, 7)
        g = series.revert_msp(f)
        ident = series.identity_egf(7)
        assert series.egf_compose(f, g) == ident
        assert series.egf_compose(g, f) == ident


# ---------------------------------------------------------------------------
# reversion
# ---------------------------------------------------------------------------


def test_revert_rooted_trees():
    f = egf(*[(-1) ** (j - 1) * j for j in range(1, 13)])
    for path in (series.revert_msp, series.revert_comtet, series.revert_oracle):
        got = path(f)
        for n in range(1, 13):
            assert got.f(n) == n ** (n - 1)


def test_revert_identity_and_scaling():
    ident = series.identity_egf(5)
    for path in (series.revert_msp, series.revert_comtet, series.revert_oracle):
        assert path(ident) == ident
    doubled = egf(2, 0, 0, 0)
    got = series.revert_comtet(doubled)
    assert got.coeffs == (F(1, 2), F(0), F(0), F(0))


def test_revert_logarithm():
    ones = egf(*[1] * 12)
    for path in (series.revert_msp, series.revert_comtet, series.revert_oracle):
        got = path(ones)
        for n in range(1, 13):
            assert got.f(n) == (-1) ** (n - 1) * factorial(n - 1)


def test_revert_total_partitions():
    f = egf(1, -1, -1, -1)
    assert [series.revert_oracle(f).f(n) for n in range(1, 5)] == [1, 1, 4, 26]
    assert [series.revert_msp(f).f(n) for n in range(1, 5)] == [1, 1, 4, 26]


def test_revert_zero_f1_rejected():
    with pytest.raises(ValueError):
        egf(0, 1, 2)


def test_three_paths_agree_random():
    rng = random.Random("three-paths")
    for _ in range(40):
        order = rng.randint(1, 8)
        f = random_egf(rng, order)
        a = series.revert_msp(f)
        assert a == series.revert_comtet(f)
        assert a == series.revert_oracle(f)


def test_revert_involution():
    rng = random.Random("involution")
    for _ in range(20):
        f = random_egf(rng, 8)
        assert series.revert_msp(series.revert_msp(f)) == f


# ---------------------------------------------------------------------------
# total partitions and the exp transform
# ---------------------------------------------------------------------------


def test_total_partitions_recurrence():
    assert series.total_partitions_recurrence(4) == [1, 1, 4, 26]
    rows = series.total_partitions_triangle(8)
    for n in range(1, 9):
        assert rows[n][1] == 2 ** (n - 1)
        assert rows[n][n] == factorial(n)
        if n >= 2:
            assert rows[n][2] == 2 ** (n - 1) * (2**n - n - 1)
    # recurrence values match the reversion paths further out
    t = series.total_partitions_recurrence(10)
    got = series.revert_msp(series.total_partitions_egf(10))
    assert [got.f(n) for n in range(1, 11)] == t


def test_exp_transform_stirling_rows():
    ones = egf(*[1] * 6)
    rows = series.exp_transform(ones)
    assert str(rows[2]) == "t + 3*t^2 + t^3"
    from mspkit.stirling import bell_numbers, s2_table

    s2 = s2_table(6)
    for n, row in enumerate(rows, start=1):
        for k in range(n + 1):
            assert row.coefficient(k) == s2.value(n, k)
    bell = bell_numbers(6)
    for n, row in enumerate(rows, start=1):
        assert row.evaluate(1) == bell[n]


def test_exp_transform_inverse_rows():
    ones = egf(*[1] * 6)
    rows = series.exp_transform_inverse(ones)
    assert str(rows[2]) == "2*t - 3*t^2 + t^3"
    from mspkit.stirling import s1_table

    s1 = s1_table(6)
    for n, row in enumerate(rows, start=1):
        for k in range(n + 1):
            assert row.coefficient(k) == s1.value(n, k)
    # the same rows arise by transforming the reverted series
    assert series.exp_transform(series.revert_msp(ones)) == rows


def test_exp_transform_scaling_homogeneity():
    rng = random.Random("scaling")
    for _ in range(10):
        f = random_egf(rng, 6)
        a = F(rng.randint(1, 7), rng.randint(1, 5))
        scaled = EgfCoeffs(tuple(a * c for c in f))
        rows = series.exp_transform(f)
        scaled_rows = series.exp_transform(scaled)
        for n in range(1, 7):
            for k in range(n + 1):
                assert scaled_rows[n - 1].coefficient(k) == a**k * rows[
                    n - 1
                ].coefficient(k)
