"""Truncated exponential generating functions and exact Lagrange inversion.

A series f = sum f_n x^n / n! with f_0 = 0 and f_1 != 0 is carried by its
coefficient list f_1..f_N of exact rationals.  Reversion (the compositional
inverse) is computed by three structurally independent paths:

    revert_msp     signed coefficient sums over partition types P(2n-2, n-1)
    revert_comtet  alternating sums of associated Bell polynomials evaluated
                   at (0, f_2, ..., f_n) with exact negative powers of f_1
    revert_oracle  term-by-term solution of f(g(x)) = x using plain truncated
                   power-series substitution in ordinary normalization

The three must agree exactly; the verify module and the test suite compare
them on random rational inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import msp
from .ptypes import partition_types, stirling_fn, subset_fn


@dataclass(frozen=True)
class EgfCoeffs:
    """Coefficients f_1..f_N of an EGF with f_0 = 0 and f_1 != 0."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("at least one coefficient is required")
        if self.coeffs[0] == 0:
            raise ValueError("f_1 must be nonzero")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def f(self, n: int) -> Fraction:
        """f_n, with f_0 = 0 and zero beyond the truncation order."""
        if n < 1 or n > len(self.coeffs):
            return Fraction(0)
        return self.coeffs[n - 1]

    def truncate(self, order: int) -> EgfCoeffs:
        if order < 1:
            raise ValueError("order must be >= 1")
        padded = self.coeffs[:order] + (Fraction(0),) * (order - len(self.coeffs))
        return EgfCoeffs(padded)

    def __iter__(self):
        return iter(self.coeffs)


def identity_egf(order: int = 1) -> EgfCoeffs:
    """The identity series x (coefficients 1, 0, 0, ...)."""
    return EgfCoeffs((Fraction(1),) + (Fraction(0),) * (order - 1))


@dataclass(frozen=True)
class TPoly:
    """Polynomial in a formal parameter t; coefficients c_0..c_n, trimmed."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def evaluate(self, t: Fraction | int) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * Fraction(t) + c
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not chunks:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append(("- " if c < 0 else "+ ") + body)
        return " ".join(chunks) if chunks else "0"


# ---------------------------------------------------------------------------
# numeric evaluation of the polynomial families at a coefficient sequence
# ---------------------------------------------------------------------------


def _bell_value(n: int, k: int, f) -> Fraction:
    """B_{n,k}(f_1, ..., f_{n-k+1}) by direct subset-function summation."""
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    total = Fraction(0)
    for pt in partition_types(n, k):
        v = Fraction(subset_fn(pt))
        for j, r in enumerate(pt.r):
            if r:
                v *= f(j + 1) ** r
        total += v
    return total


def _lie_value(n: int, k: int, f) -> Fraction:
    """S_{n,k}(f_1, ...) / f_1^(2n-1) by direct signed summation."""
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    total = Fraction(0)
    for pt in partition_types(2 * n - 1 - k, n - 1):
        v = Fraction(stirling_fn(pt))
        for j, r in enumerate(pt.r):
            if r:
                v *= f(j + 1) ** r
        total += v
    return total / f(1) ** (2 * n - 1)


# ---------------------------------------------------------------------------
# series arithmetic
# ---------------------------------------------------------------------------


def egf_product(f, g, order: int) -> tuple[Fraction, ...]:
    """EGF convolution h_n = sum_j C(n,j) f_j g_{n-j} for n = 0..order.

    Inputs are plain sequences indexed from 0 (constant term included).
    """
    fv = [Fraction(c) for c in f]
    gv = [Fraction(c) for c in g]

    def get(seq, i):
        return seq[i] if i < len(seq) else Fraction(0)

    out = []
    binom = [1]
    for n in range(order + 1):
        out.append(sum(binom[j] * get(fv, j) * get(gv, n - j) for j in range(n + 1)))
        binom = [1] + [binom[i] + binom[i + 1] for i in range(n)] + [1]
    return tuple(out)


def egf_compose(f: EgfCoeffs, g: EgfCoeffs, order: int | None = None) -> EgfCoeffs:
    """Composition f(g(x)) to the given order via h_n = sum_k B_{n,k}(g) f_k."""
    if order is None:
        order = min(f.order, g.order)
    out = []
    for n in range(1, order + 1):
        out.append(
            sum((_bell_value(n, k, g.f) * f.f(k) for k in range(1, n + 1)), Fraction(0))
        )
    return EgfCoeffs(tuple(out))


# ---------------------------------------------------------------------------
# the three reversion paths
# ---------------------------------------------------------------------------


def revert_msp(f: EgfCoeffs) -> EgfCoeffs:
    """Inverse coefficients from the Laurent first-kind family at k = 1."""
    return EgfCoeffs(tuple(_lie_value(n, 1, f.f) for n in range(1, f.order + 1)))


def revert_comtet(f: EgfCoeffs, cache: msp.MspCache | None = None) -> EgfCoeffs:
    """Inverse coefficients by the alternating associated-Bell expansion

    fbar_n = sum_{k=1}^{n-1} (-1)^k f_1^(-n-k) Bt_{n+k-1,k}(0, f_2, ..., f_n),
    with fbar_1 = 1/f_1.  The polynomials are generated symbolically and
    evaluated exactly.
    """
    f1 = f.f(1)
    out = [1 / f1]
    for n in range(2, f.order + 1):
        point = [Fraction(0)] + [f.f(j) for j in range(2, n + 1)]
        total = Fraction(0)
        for k in range(1, n):
            poly = msp.assoc_bell(n + k - 1, k, cache)
            width = poly.width()
            pt = point + [Fraction(0)] * max(0, width - len(point))
            value = poly.eval_rat(pt)
            if value:
                total += (-1) ** k * f1 ** (-n - k) * value
        out.append(total)
    return EgfCoeffs(tuple(out))


def revert_oracle(f: EgfCoeffs) -> EgfCoeffs:
    """Inverse coefficients by solving f(g(x)) = x degree by degree.

    Works in ordinary normalization a_n = f_n/n!; the x^n coefficient of
    sum_m a_m g(x)^m is linear in the unknown b_n with coefficient a_1.
    """
    N = f.order
    a = [Fraction(0)] + [f.f(n) / factorial(n) for n in range(1, N + 1)]
    b = [Fraction(0), 1 / a[1]]
    for n in range(2, N + 1):
        # powers of the partial inverse sum_{i<n} b_i x^i, truncated at x^n
        partial = b + [Fraction(0)] * (n + 1 - len(b))
        power = partial[: n + 1]
        residue = Fraction(0)
        for m in range(2, n + 1):
            power = _trunc_mul(power, partial, n)
            if a[m]:
                residue += a[m] * power[n]
        b.append(-residue / a[1])
    return EgfCoeffs(tuple(b[n] * factorial(n) for n in range(1, N + 1)))


def _trunc_mul(p: list[Fraction], q: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, pi in enumerate(p):
        if pi == 0 or i > order:
            continue
        for j in range(min(order - i, len(q) - 1) + 1):
            if q[j]:
                out[i + j] += pi * q[j]
    return out


# ---------------------------------------------------------------------------
# applications
# ---------------------------------------------------------------------------


def total_partitions_triangle(nmax: int) -> list[list[int]]:
    """The triangle b_{n,k} = (2n-k) b_{n-1,k-1} + 2k b_{n-1,k}, rows 0..nmax."""
    rows = [[1]]
    for n in range(1, nmax + 1):
        prev = rows[-1]

        def at(k: int) -> int:
            return prev[k] if 0 <= k < len(prev) else 0

        rows.append(
            [0] + [(2 * n - k) * at(k - 1) + 2 * k * at(k) for k in range(1, n + 1)]
        )
    return rows


def total_partitions_recurrence(nmax: int) -> list[int]:
    """t(1..nmax), the total-partition numbers, as row sums of the triangle."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    rows = total_partitions_triangle(nmax - 1)
    return [sum(rows[n - 1]) for n in range(1, nmax + 1)]


def total_partitions_egf(order: int) -> EgfCoeffs:
    """Coefficients of 1 + 2x - e^x (f_1 = 1, f_j = -1 for j >= 2)."""
    return EgfCoeffs((Fraction(1),) + (Fraction(-1),) * (order - 1))


def exp_transform(f: EgfCoeffs, order: int | None = None) -> list[TPoly]:
    """Rows n = 1..order of the expansion of exp(t*f); the t^k coefficient of
    row n is B_{n,k}(f_1, ..., f_{n-k+1})."""
    if order is None:
        order = f.order
    return [
        TPoly(tuple([Fraction(0)] + [_bell_value(n, k, f.f) for k in range(1, n + 1)]))
        for n in range(1, order + 1)
    ]


def exp_transform_inverse(f: EgfCoeffs, order: int | None = None) -> list[TPoly]:
    """Rows n = 1..order of the expansion of exp(t*fbar) computed directly
    from f through the Laurent first-kind values, without reverting."""
    if order is None:
        order = f.order
    return [
        TPoly(tuple([Fraction(0)] + [_lie_value(n, k, f.f) for k in range(1, n + 1)]))
        for n in range(1, order + 1)
    ]
