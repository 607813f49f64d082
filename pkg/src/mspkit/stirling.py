"""Integer specializations: Stirling, associated Stirling, Lah and Bell numbers.

Recurrence-built triangular tables are the canonical source; every closed
formula in this module is an independent computation path that must agree
with the tables.  All arithmetic is exact (Python ints, Fractions for the
intermediate ratios that are not termwise integral).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .ptypes import cycle_fn, partition_types


@dataclass(frozen=True)
class NumberTable:
    """Triangular array indexed 0 <= k <= n <= nmax; zero outside."""

    kind: str
    rows: tuple[tuple[int, ...], ...]

    @property
    def nmax(self) -> int:
        return len(self.rows) - 1

    def value(self, n: int, k: int) -> int:
        if 0 <= k <= n <= self.nmax:
            return self.rows[n][k]
        return 0


def _build(kind: str, nmax: int, step) -> NumberTable:
    """Fill a triangle from row 0 = (1,) using step(prev_row, n, k)."""
    if nmax < 0:
        raise ValueError("table size must be nonnegative")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, nmax + 1):
        prev = rows[n - 1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k < len(prev) else 0

        rows.append(tuple([0] + [step(at, n - 1, k) for k in range(1, n + 1)]))
    return NumberTable(kind, tuple(rows))


def s1_table(nmax: int) -> NumberTable:
    """Signed Stirling numbers of the first kind:
    s1(n+1,k) = s1(n,k-1) - n*s1(n,k)."""
    table = _build("s1", nmax, lambda at, n, k: at(k - 1) - n * at(k))
    ctab = cycle_table(nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            sign = 1 if (n - k) % 2 == 0 else -1
            assert table.value(n, k) == sign * ctab.value(n, k)
    return table


def s2_table(nmax: int) -> NumberTable:
    """Stirling numbers of the second kind: s2(n+1,k) = s2(n,k-1) + k*s2(n,k)."""
    return _build("s2", nmax, lambda at, n, k: at(k - 1) + k * at(k))


def cycle_table(nmax: int) -> NumberTable:
    """Unsigned first-kind (cycle) numbers: c(n+1,k) = c(n,k-1) + n*c(n,k)."""
    return _build("c", nmax, lambda at, n, k: at(k - 1) + n * at(k))


def assoc_s2_table(nmax: int) -> NumberTable:
    """Associated Stirling numbers of the second kind (no singleton blocks),
    built from the convolution S~(n,k) = sum_{j>=2} C(n-1,j-1) S~(n-j,k-1)."""
    if nmax < 0:
        raise ValueError("table size must be nonnegative")
    rows: list[list[int]] = [[1]]
    for n in range(1, nmax + 1):
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = sum(
                comb(n - 1, j - 1) * rows[n - j][k - 1]
                for j in range(2, n - k + 2)
                if k - 1 <= n - j
            )
        rows.append(row)
    return NumberTable("assoc", tuple(tuple(r) for r in rows))


def lah_tables(nmax: int) -> tuple[NumberTable, NumberTable]:
    """Unsigned and signed Lah numbers:
    l+(n,k) = (n!/k!) C(n-1,k-1), l(n,k) = (-1)^n l+(n,k)."""
    unsigned: list[tuple[int, ...]] = [(1,)]
    signed: list[tuple[int, ...]] = [(1,)]
    for n in range(1, nmax + 1):
        urow = [0] + [
            factorial(n) // factorial(k) * comb(n - 1, k - 1) for k in range(1, n + 1)
        ]
        sgn = 1 if n % 2 == 0 else -1
        unsigned.append(tuple(urow))
        signed.append(tuple(sgn * v for v in urow))
    return (
        NumberTable("lah", tuple(unsigned)),
        NumberTable("lah_signed", tuple(signed)),
    )


def bell_numbers(nmax: int) -> list[int]:
    """Bell numbers B(0..nmax) as row sums of the second-kind table."""
    t = s2_table(nmax)
    return [sum(t.value(n, k) for k in range(n + 1)) for n in range(nmax + 1)]


# ---------------------------------------------------------------------------
# closed formulas (verification paths)
# ---------------------------------------------------------------------------


def s2_bertrand(n: int, k: int) -> int:
    """s2(n,k) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^n."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({n},{k})")
    total = sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(1, k + 1))
    q, rem = divmod(total, factorial(k))
    assert rem == 0
    return q


def s1_schloemilch_terms(
    n: int, k: int, s2: NumberTable | None = None
) -> list[tuple[int, int]]:
    """Nonzero terms of Schloemilch's formula for s1(n,k), each as a pair
    (signed C(2n-2-r,k-1), C(2n-k,r+1-k) * s2(2n-1-k-r, n-1-r))."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({n},{k})")
    if s2 is None:
        s2 = s2_table(2 * n)
    terms = []
    for r in range(k - 1, n):
        sign = 1 if (n - 1 - r) % 2 == 0 else -1
        rest = comb(2 * n - k, r + 1 - k) * s2.value(2 * n - 1 - k - r, n - 1 - r)
        lead = sign * comb(2 * n - 2 - r, k - 1)
        if lead and rest:
            terms.append((lead, rest))
    return terms


def s1_schloemilch(n: int, k: int, s2: NumberTable | None = None) -> int:
    """Schloemilch's formula: s1(n,k) as an alternating double-binomial sum
    over second-kind Stirling numbers."""
    return sum(lead * rest for lead, rest in s1_schloemilch_terms(n, k, s2))


def s1_via_assoc_terms(
    n: int, k: int, assoc: NumberTable | None = None
) -> list[tuple[int, int]]:
    """Nonzero terms of the associated-number variant, each as a pair
    (signed C(2n-2-r,k-1), assoc(2n-1-k-r, n-1-r))."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({n},{k})")
    if assoc is None:
        assoc = assoc_s2_table(2 * n)
    terms = []
    for r in range(k - 1, n):
        sign = 1 if (n - 1 - r) % 2 == 0 else -1
        rest = assoc.value(2 * n - 1 - k - r, n - 1 - r)
        lead = sign * comb(2 * n - 2 - r, k - 1)
        if lead and rest:
            terms.append((lead, rest))
    return terms


def s1_via_assoc(n: int, k: int, assoc: NumberTable | None = None) -> int:
    """s1(n,k) from associated Stirling numbers; runs with smaller terms
    than the Schloemilch sum."""
    return sum(lead * rest for lead, rest in s1_via_assoc_terms(n, k, assoc))


def s2_via_cycle(n: int, k: int) -> int:
    """s2(n,k) as a signed cycle-function sum over P(2n-1-k, n-1).

    The binomial ratio is not termwise integral, so the partial sums are
    exact rationals; the total must come out an integer.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({n},{k})")
    total = Fraction(0)
    top = comb(2 * n - 2, k - 1)
    for pt in partition_types(2 * n - 1 - k, n - 1):
        r1 = pt.r[0] if pt.r else 0
        sign = 1 if (r1 - (k - 1)) % 2 == 0 else -1
        total += Fraction(sign * top, comb(2 * n - 2, r1)) * cycle_fn(pt)
    assert total.denominator == 1, f"cycle-sum not integral at ({n},{k})"
    return int(total)


# ---------------------------------------------------------------------------
# identity checks over whole tables
# ---------------------------------------------------------------------------


def stirling_orthogonality_check(nmax: int) -> bool:
    """sum_j s1(n,j) s2(j,k) = delta(n,k) for all 1 <= k <= n <= nmax."""
    s1, s2 = s1_table(nmax), s2_table(nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            total = sum(s1.value(n, j) * s2.value(j, k) for j in range(k, n + 1))
            if total != (1 if n == k else 0):
                return False
    return True


def lah_self_inverse_check(nmax: int) -> bool:
    """The signed Lah numbers are self-inverse under triangular product."""
    _, signed = lah_tables(nmax)
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            total = sum(signed.value(n, j) * signed.value(j, k) for j in range(k, n + 1))
            if total != (1 if n == k else 0):
                return False
    return True


def example58_identities(nmax: int) -> bool:
    """Summation identities lifted from the binomial convolution recurrences:

    c(n+1,k+1)  = sum_j (n!/j!) c(j,k)
    s2(n+1,k+1) = sum_j C(n,j) s2(j,k)
    """
    ctab, s2 = cycle_table(nmax + 1), s2_table(nmax + 1)
    for n in range(0, nmax + 1):
        for k in range(0, n + 1):
            lhs_c = ctab.value(n + 1, k + 1)
            rhs_c = sum(
                factorial(n) // factorial(j) * ctab.value(j, k)
                for j in range(k, n + 1)
            )
            lhs_s = s2.value(n + 1, k + 1)
            rhs_s = sum(comb(n, j) * s2.value(j, k) for j in range(k, n + 1))
            if lhs_c != rhs_c or lhs_s != rhs_s:
                return False
    return True
