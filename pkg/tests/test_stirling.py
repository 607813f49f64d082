"""Tests for the integer tables against brute-force counting oracles."""

from __future__ import annotations

from math import comb, factorial

import pytest

from mspkit import stirling

# ---------------------------------------------------------------------------
# oracles: exhaustive set-partition enumeration via restricted growth strings
# ---------------------------------------------------------------------------


def set_partitions(n: int):
    """Yield every partition of {0..n-1} as a block-index string."""

    def rec(prefix: list[int], used: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(used + 1):
            yield from rec(prefix + [v], used + (1 if v == used else 0))

    yield from rec([], 0)


def count_partitions(n: int, k: int, min_block: int = 1) -> int:
    count = 0
    for rgs in set_partitions(n):
        blocks = max(rgs) + 1
        if blocks != k:
            continue
        sizes = [rgs.count(b) for b in range(blocks)]
        if all(s >= min_block for s in sizes):
            count += 1
    return count


# ---------------------------------------------------------------------------
# recurrence tables
# ---------------------------------------------------------------------------


def test_s1_values():
    t = stirling.s1_table(8)
    for n in range(1, 9):
        assert t.value(n, 1) == (-1) ** (n - 1) * factorial(n - 1)
        assert t.value(n, n) == 1
    assert t.value(7, 4) == -735
    assert t.value(4, 2) == 11


def test_s1_sign_relation():
    s1 = stirling.s1_table(10)
    c = stirling.cycle_table(10)
    for n in range(11):
        for k in range(n + 1):
            assert s1.value(n, k) == (-1) ** (n - k) * c.value(n, k)


def test_s2_values():
    t = stirling.s2_table(8)
    assert t.value(4, 2) == 7
    for n in range(1, 9):
        assert t.value(n, 1) == 1
        assert t.value(n, n) == 1
    assert t.value(7, 3) == count_partitions(7, 3) == 301


def test_table_outside_range_is_zero():
    t = stirling.s2_table(5)
    assert t.value(6, 2) == 0
    assert t.value(3, 4) == 0
    assert t.value(-1, 0) == 0


def test_cycle_table_brute_force():
    from test_ptypes import count_cycle_arrangements

    t = stirling.cycle_table(6)
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert t.value(n, k) == count_cycle_arrangements(n, k)


def test_assoc_table():
    t = stirling.assoc_s2_table(10)
    assert t.value(6, 3) == 15
    assert t.value(5, 2) == count_partitions(5, 2, min_block=2) == 10
    assert t.value(4, 1) == 1
    for n in range(1, 11):
        assert t.value(n, n) == 0
    # double factorial on the diagonal 2n, n
    for n in range(1, 6):
        ff = 1
        for i in range(1, 2 * n, 2):
            ff *= i
        assert t.value(2 * n, n) == ff
        for ell in range(1, n):
            assert t.value(2 * n - ell, n) == 0


def test_assoc_table_brute_force():
    t = stirling.assoc_s2_table(8)
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert t.value(n, k) == count_partitions(n, k, min_block=2)


def test_lah_tables():
    unsigned, signed = stirling.lah_tables(8)
    assert unsigned.value(4, 2) == 36
    for n in range(1, 9):
        assert signed.value(n, n) == (-1) ** n
        for k in range(1, n + 1):
            assert unsigned.value(n, k) == factorial(n) // factorial(k) * comb(
                n - 1, k - 1
            )


def test_bell_numbers():
    got = stirling.bell_numbers(8)
    assert got == [1, 1, 2, 5, 15, 52, 203, 877, 4140]


# ---------------------------------------------------------------------------
# closed formulas agree with the tables
# ---------------------------------------------------------------------------


def test_bertrand():
    assert stirling.s2_bertrand(4, 2) == 7
    t = stirling.s2_table(15)
    for n in range(1, 16):
        for k in range(1, n + 1):
            assert stirling.s2_bertrand(n, k) == t.value(n, k)
    assert stirling.s2_bertrand(9, 4) == t.value(9, 4)
    with pytest.raises(ValueError):
        stirling.s2_bertrand(3, 4)


def test_schloemilch_paper_products():
    assert stirling.s1_schloemilch_terms(7, 4) == [(-84, 90), (56, 150), (-35, 45)]
    assert stirling.s1_via_assoc_terms(7, 4) == [(-84, 15), (56, 10), (-35, 1)]
    assert stirling.s1_schloemilch(7, 4) == -735
    assert stirling.s1_via_assoc(7, 4) == -735


def test_schloemilch_full_range():
    s1 = stirling.s1_table(15)
    s2 = stirling.s2_table(30)
    assoc = stirling.assoc_s2_table(30)
    for n in range(1, 16):
        for k in range(1, n + 1):
            assert stirling.s1_schloemilch(n, k, s2) == s1.value(n, k)
            assert stirling.s1_via_assoc(n, k, assoc) == s1.value(n, k)
        assert stirling.s1_schloemilch(n, n) == 1
        assert stirling.s1_via_assoc(n, n) == 1


def test_s2_via_cycle():
    assert stirling.s2_via_cycle(3, 2) == 3
    assert stirling.s2_via_cycle(6, 3) == 90
    t = stirling.s2_table(15)
    for n in range(1, 16):
        for k in range(1, n + 1):
            assert stirling.s2_via_cycle(n, k) == t.value(n, k)
        assert stirling.s2_via_cycle(n, n) == 1


# ---------------------------------------------------------------------------
# inversion identities
# ---------------------------------------------------------------------------


def test_orthogonality():
    assert stirling.stirling_orthogonality_check(1)
    assert stirling.stirling_orthogonality_check(15)
    # the (4,2) row: 11*1 - 6*3 + 1*7 = 0
    s1 = stirling.s1_table(4)
    s2 = stirling.s2_table(4)
    row = [s1.value(4, j) * s2.value(j, 2) for j in range(2, 5)]
    assert row == [11, -18, 7]
    assert sum(row) == 0


def test_lah_self_inverse():
    assert stirling.lah_self_inverse_check(10)
    assert stirling.lah_self_inverse_check(15)


def test_example58():
    assert stirling.example58_identities(12)
    # c(4,2) = 6*c(1,1) + 3*c(2,1) + 1*c(3,1) = 6 + 3 + 2 = 11
    c = stirling.cycle_table(4)
    total = sum(factorial(3) // factorial(j) * c.value(j, 1) for j in range(1, 4))
    assert total == c.value(4, 2) == 11
