"""Generators for the multivariate Stirling polynomial families.

Six families are produced, each cached under a one-letter kind tag:

    S    first kind, explicit coefficient formula
    B    second kind (partial exponential Bell polynomials), explicit
    Bt   associated Bell polynomials (no singleton blocks, X1 absent)
    L    Lah polynomials (order-function weights)
    A    the Laurent family S_{n,k} / X1^(2n-1)
    Bn   complete Bell polynomials, sum over k

Both polynomial families also have an independent recursive generation
path (differential recurrences); explicit and recursive results must
agree, which the verify module checks structurally.

Boundary conventions used throughout: B_{0,0} = 1, B_{n,0} = 0 for n > 0,
everything vanishes above the diagonal, and the first-kind family has no
(0,0) member.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .poly import LaurentX1, MPoly
from .ptypes import PartitionType, order_fn, partition_types, stirling_fn, subset_fn

KINDS = ("S", "B", "Bt", "L", "A", "Bn")

CacheValue = MPoly | LaurentX1


class MspCache:
    """Append-only memo for generated polynomials, keyed (kind, n, k)."""

    def __init__(self):
        self._store: dict[tuple[str, int, int], CacheValue] = {}

    def get(self, kind: str, n: int, k: int) -> CacheValue | None:
        return self._store.get((kind, n, k))

    def put(self, kind: str, n: int, k: int, value: CacheValue) -> CacheValue:
        return self._store.setdefault((kind, n, k), value)

    def __len__(self) -> int:
        return len(self._store)


_DEFAULT_CACHE = MspCache()


def _cache(cache: MspCache | None) -> MspCache:
    return _DEFAULT_CACHE if cache is None else cache


def _check_triangle(n: int, k: int, k_min: int = 1):
    if k < k_min or n < k:
        raise ValueError(f"indices out of range: need {k_min} <= k <= n, got ({n},{k})")


def _type_sum(types: list[PartitionType], weight_fn) -> MPoly:
    terms = {pt.r: weight_fn(pt) for pt in types}
    return MPoly(terms)


# ---------------------------------------------------------------------------
# second kind
# ---------------------------------------------------------------------------


def bell_explicit(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """B_{n,k} as the subset-function sum over all (n,k)-partition types."""
    if k == 0:
        return MPoly.const(1) if n == 0 else MPoly.zero()
    _check_triangle(n, k)
    c = _cache(cache)
    hit = c.get("B", n, k)
    if hit is None:
        hit = c.put("B", n, k, _type_sum(partition_types(n, k), subset_fn))
    return hit


def _bell_any(n: int, k: int, cache: MspCache) -> MPoly:
    """B with zero continuation outside the triangle."""
    if k < 0 or n < 0 or k > n:
        return MPoly.zero()
    return bell_explicit(n, k, cache)


def bell_recursive(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """B_{n,k} via the derivative recurrence

    B_{n+1,k} = X1*B_{n,k-1} + sum_j X_{j+1} * dB_{n,k}/dX_j,  B_{1,1} = X1.
    """
    if k == 0:
        return MPoly.const(1) if n == 0 else MPoly.zero()
    _check_triangle(n, k)
    c = _cache(cache)
    x1 = MPoly.var(1)
    for m in range(1, n + 1):
        for kk in range(1, m + 1):
            if c.get("B_rec", m, kk) is not None:
                continue
            if m == 1:
                c.put("B_rec", 1, 1, x1)
                continue
            # B_{m-1,kk-1} is zero for kk = 1 since m-1 >= 1 here
            prev_low = c.get("B_rec", m - 1, kk - 1) if kk > 1 else None
            prev = c.get("B_rec", m - 1, kk) or MPoly.zero()
            acc = x1 * prev_low if prev_low is not None else MPoly.zero()
            for j in range(1, prev.width() + 1):
                acc = acc + MPoly.var(j + 1) * prev.partial_derivative(j)
            c.put("B_rec", m, kk, acc)
    return c.get("B_rec", n, k)  # type: ignore[return-value]


def complete_bell(n: int, cache: MspCache | None = None) -> MPoly:
    """Complete Bell polynomial, the sum of B_{n,k} over k = 1..n."""
    if n < 1:
        raise ValueError("complete Bell polynomials start at n = 1")
    c = _cache(cache)
    hit = c.get("Bn", n, 0)
    if hit is None:
        total = MPoly.zero()
        for k in range(1, n + 1):
            total = total + bell_explicit(n, k, c)
        hit = c.put("Bn", n, 0, total)
    return hit


def assoc_bell(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """Associated Bell polynomial: B_{n,k} restricted to types with r1 = 0."""
    if k < 0 or n < 0 or k > n:
        raise ValueError(f"indices out of range: ({n},{k})")
    if k == 0:
        return MPoly.const(1) if n == 0 else MPoly.zero()
    c = _cache(cache)
    hit = c.get("Bt", n, k)
    if hit is None:
        types = [pt for pt in partition_types(n, k) if not (pt.r and pt.r[0])]
        hit = c.put("Bt", n, k, _type_sum(types, subset_fn))
    return hit


def _assoc_any(n: int, k: int, cache: MspCache) -> MPoly:
    if k < 0 or n < 0 or k > n:
        return MPoly.zero()
    return assoc_bell(n, k, cache)


def lah_poly(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """Lah polynomial: order-function sum over all (n,k)-partition types."""
    _check_triangle(n, k)
    c = _cache(cache)
    hit = c.get("L", n, k)
    if hit is None:
        hit = c.put("L", n, k, _type_sum(partition_types(n, k), order_fn))
    return hit


# ---------------------------------------------------------------------------
# first kind
# ---------------------------------------------------------------------------


def stirling_first_explicit(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """S_{n,k} as the signed coefficient sum over P(2n-1-k, n-1)."""
    _check_triangle(n, k)
    c = _cache(cache)
    hit = c.get("S", n, k)
    if hit is None:
        types = partition_types(2 * n - 1 - k, n - 1)
        hit = c.put("S", n, k, _type_sum(types, stirling_fn))
    return hit


def _sfirst_any(n: int, k: int, cache: MspCache) -> MPoly:
    if k < 1 or n < k:
        return MPoly.zero()
    return stirling_first_explicit(n, k, cache)


def stirling_first_recursive(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """S_{n,k} via the derivative recurrence

    S_{n+1,k} = -(2n-1)*X2*S_{n,k} + X1*(S_{n,k-1} + sum_j X_{j+1}*dS_{n,k}/dX_j),
    seeded by S_{1,1} = 1.
    """
    _check_triangle(n, k)
    c = _cache(cache)
    x1, x2 = MPoly.var(1), MPoly.var(2)
    for m in range(1, n + 1):
        for kk in range(1, m + 1):
            if c.get("S_rec", m, kk) is not None:
                continue
            if m == 1:
                c.put("S_rec", 1, 1, MPoly.const(1))
                continue
            prev = c.get("S_rec", m - 1, kk) or MPoly.zero()
            # S_{m-1,kk-1} is zero for kk = 1 since m-1 >= 1 here
            prev_low = (c.get("S_rec", m - 1, kk - 1) if kk > 1 else None) or MPoly.zero()
            deriv = MPoly.zero()
            for j in range(1, prev.width() + 1):
                deriv = deriv + MPoly.var(j + 1) * prev.partial_derivative(j)
            acc = x2 * prev * (-(2 * (m - 1) - 1)) + x1 * (prev_low + deriv)
            c.put("S_rec", m, kk, acc)
    return c.get("S_rec", n, k)  # type: ignore[return-value]


def stirling_first_from_assoc(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """S_{n,k} via the alternating expansion in associated Bell polynomials:

    sum_{r=k-1}^{n-1} (-1)^(n-1-r) C(2n-2-r, k-1) X1^r Bt_{2n-1-k-r, n-1-r}.
    """
    _check_triangle(n, k)
    c = _cache(cache)
    total = MPoly.zero()
    for r in range(k - 1, n):
        coeff = comb(2 * n - 2 - r, k - 1)
        if coeff == 0:
            continue
        part = _assoc_any(2 * n - 1 - k - r, n - 1 - r, c)
        if part.is_zero:
            continue
        sign = 1 if (n - 1 - r) % 2 == 0 else -1
        total = total + part.shift_x1(r) * (sign * coeff)
    return total


def lie_first(n: int, k: int, cache: MspCache | None = None) -> LaurentX1:
    """The Laurent object S_{n,k} / X1^(2n-1)."""
    if n == 0 and k == 0:
        raise ValueError("the (0,0) member is not a polynomial object")
    _check_triangle(n, k)
    c = _cache(cache)
    hit = c.get("A", n, k)
    if hit is None:
        hit = c.put("A", n, k, LaurentX1(stirling_first_explicit(n, k, c), 2 * n - 1))
    return hit


def _lie_any(n: int, k: int, cache: MspCache) -> LaurentX1:
    if n == 0 and k == 0:
        return LaurentX1.one()
    if k < 1 or n < k:
        return LaurentX1.zero()
    return lie_first(n, k, cache)


# ---------------------------------------------------------------------------
# structural transforms between the families
# ---------------------------------------------------------------------------


def first_from_second_schloemilch(
    n: int, k: int, cache: MspCache | None = None
) -> LaurentX1:
    """Schloemilch-type expansion of S_{n,k}/X1^(2n-1) in Bell polynomials:

    sum_r (-1)^(n-1-r) C(2n-2-r,k-1) C(2n-k,r+1-k) X1^(r-2n+1) B_{2n-1-k-r,n-1-r}.
    """
    _check_triangle(n, k)
    c = _cache(cache)
    total = LaurentX1.zero()
    for r in range(k - 1, n):
        coeff = comb(2 * n - 2 - r, k - 1) * comb(2 * n - k, r + 1 - k)
        if coeff == 0:
            continue
        part = _bell_any(2 * n - 1 - k - r, n - 1 - r, c)
        if part.is_zero:
            continue
        sign = 1 if (n - 1 - r) % 2 == 0 else -1
        total = total + LaurentX1(part * (sign * coeff), 2 * n - 1 - r)
    return total


def second_from_first(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """The reverse Schloemilch-type expansion, rebuilding B_{n,k} from the
    Laurent first-kind family; the X1 denominators must cancel exactly."""
    _check_triangle(n, k)
    c = _cache(cache)
    total = LaurentX1.zero()
    for r in range(k - 1, n):
        coeff = comb(2 * n - 2 - r, k - 1) * comb(2 * n - k, r + 1 - k)
        if coeff == 0:
            continue
        part = _lie_any(2 * n - 1 - k - r, n - 1 - r, c)
        if part.is_zero:
            continue
        sign = 1 if (n - 1 - r) % 2 == 0 else -1
        total = total + part * MPoly.monomial(sign * coeff, (2 * n - 1 - r,))
    return total.to_poly()


def compose_transform(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """X1^(k-1) * B_{n,k}(S_{1,1}, ..., S_{n-k+1,1}), which equals S_{n,k}.

    The k = 1 instance degenerates to S_{n,1} = S_{n,1} and is rejected.
    """
    _check_triangle(n, k)
    if k == 1:
        raise ValueError("vacuous identity: the k=1 case does not recurse")
    c = _cache(cache)
    subs = [stirling_first_explicit(j, 1, c) for j in range(1, n - k + 2)]
    return bell_explicit(n, k, c).substitute(subs).shift_x1(k - 1)


def compose_transform_second(
    n: int, k: int, cache: MspCache | None = None
) -> LaurentX1:
    """X1^(2k-n) * S_{n,k}(S_{1,1}, ..., S_{n-k+1,1}), which equals B_{n,k}
    (a Laurent identity when 2k < n)."""
    _check_triangle(n, k)
    c = _cache(cache)
    subs = [stirling_first_explicit(j, 1, c) for j in range(1, n - k + 2)]
    inner = stirling_first_explicit(n, k, c).substitute(subs)
    if 2 * k >= n:
        return LaurentX1.from_poly(inner.shift_x1(2 * k - n))
    return LaurentX1(inner, n - 2 * k)


def convolution_recurrence(
    n: int, k: int, kind: str, cache: MspCache | None = None
) -> MPoly:
    """Binomial convolution recurrences building column k from column k-1.

    kind "B":  sum_j C(n-1,j-1) X_j B_{n-j,k-1}
    kind "S":  X1 * sum_j C(n-1,j-1) S_{j,1} S_{n-j,k-1}   (k >= 2 only)
    kind "Bt": sum_{j>=2} C(n-1,j-1) X_j Bt_{n-j,k-1}
    """
    _check_triangle(n, k)
    c = _cache(cache)
    if kind == "B":
        total = MPoly.zero()
        for j in range(1, n - k + 2):
            part = _bell_any(n - j, k - 1, c)
            if not part.is_zero:
                total = total + MPoly.var(j) * part * comb(n - 1, j - 1)
        return total
    if kind == "S":
        if k == 1:
            raise ValueError("the first-kind convolution needs column 1 as input")
        total = MPoly.zero()
        for j in range(1, n - k + 2):
            left = _sfirst_any(j, 1, c)
            right = _sfirst_any(n - j, k - 1, c)
            if not left.is_zero and not right.is_zero:
                total = total + left * right * comb(n - 1, j - 1)
        return MPoly.var(1) * total
    if kind == "Bt":
        total = MPoly.zero()
        for j in range(2, n - k + 2):
            part = _assoc_any(n - j, k - 1, c)
            if not part.is_zero:
                total = total + MPoly.var(j) * part * comb(n - 1, j - 1)
        return total
    raise ValueError(f"unknown convolution kind {kind!r} (expected B, S or Bt)")


def cor45_expand(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """Rebuild B_{n,k} from the associated family:
    sum_{r=0}^{k} C(n,r) X1^r Bt_{n-r,k-r}."""
    _check_triangle(n, k)
    c = _cache(cache)
    total = MPoly.zero()
    for r in range(k + 1):
        part = _assoc_any(n - r, k - r, c)
        if not part.is_zero:
            total = total + part.shift_x1(r) * comb(n, r)
    return total


def eq68_invert(n: int, k: int, cache: MspCache | None = None) -> MPoly:
    """Rebuild Bt_{n,k} from the plain Bell family by binomial inversion:
    sum_{j=0}^{k} (-1)^j C(n,j) X1^j B_{n-j,k-j}."""
    _check_triangle(n, k)
    c = _cache(cache)
    total = MPoly.zero()
    for j in range(k + 1):
        part = _bell_any(n - j, k - j, c)
        if not part.is_zero:
            sign = 1 if j % 2 == 0 else -1
            total = total + part.shift_x1(j) * (sign * comb(n, j))
    return total


def snk1_nested(n: int, cache: MspCache | None = None) -> MPoly:
    """S_{n,1} by the alternating nested Bell-product sum.

    Terms are indexed by subsets {j1 < ... < jr} of {2, ..., n-1}; each
    contributes (-1)^(r+1) X1^((n-2) - sum j_i) B_{n,jr} B_{jr,j(r-1)} ... B_{j1,1}.
    Intermediate X1 powers can be negative; the total is a polynomial.
    """
    if n < 2:
        raise ValueError("the nested sum starts at n = 2")
    c = _cache(cache)
    total = LaurentX1.zero()
    indices = range(2, n)
    for r in range(0, n - 1):
        for chain in combinations(indices, r):
            ladder = (1,) + chain + (n,)
            prod = MPoly.const(1)
            for lo, hi in zip(ladder, ladder[1:]):
                prod = prod * bell_explicit(hi, lo, c)
            sign = -1 if r % 2 == 0 else 1
            shift = (n - 2) - sum(chain)
            term = LaurentX1(prod * sign, -shift if shift < 0 else 0)
            if shift > 0:
                term = term * MPoly.monomial(1, (shift,))
            total = total + term
    return total.to_poly()


# ---------------------------------------------------------------------------
# uniform access for the CLI
# ---------------------------------------------------------------------------


def generate(kind: str, n: int, k: int, cache: MspCache | None = None) -> CacheValue:
    """Dispatch on the kind tag; `Bn` ignores k."""
    if kind == "S":
        return stirling_first_explicit(n, k, cache)
    if kind == "B":
        return bell_explicit(n, k, cache)
    if kind == "Bt":
        return assoc_bell(n, k, cache)
    if kind == "L":
        return lah_poly(n, k, cache)
    if kind == "A":
        return lie_first(n, k, cache)
    if kind == "Bn":
        return complete_bell(n, cache)
    raise ValueError(f"unknown kind {kind!r} (expected one of {', '.join(KINDS)})")
