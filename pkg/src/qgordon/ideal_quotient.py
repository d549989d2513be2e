"""Bigraded dimensions of quotients of C[y_1, y_2, ...] by explicit ideals.

This is the package's independent ground truth. The polynomial algebra in
variables y_j (j >= 1) is bigraded by charge (number of variables in a
monomial) and weight (sum of their indices), so each bidegree (m, w) has
the finite monomial basis of partitions of w into exactly m parts. The
ideal attached to level k and y-power exponent e is generated by

* r_w, for each weight w >= k+1: the sum over ordered (k+1)-tuples of
  positive integers with total w of the corresponding monomial, i.e. each
  degree-(k+1) monomial weighted by its multinomial number of orderings;
* y_1^e, with 1 <= e <= k+1.

A bidegree of the ideal is spanned by monomial multiples of the
generators, and its dimension is the exact integer rank of that spanning
set. Nothing here touches the recursion system or the multisum: quotient
dimensions come out of fraction-free linear algebra alone, which is what
makes the resulting tables usable as an oracle against the other two
computation routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .series import BiSeries


def partitions_exact(w: int, m: int) -> list[tuple[int, ...]]:
    """Partitions of w into exactly m parts, in decreasing lexicographic order."""
    if m < 0 or w < 0:
        return []
    if m == 0:
        return [()] if w == 0 else []
    if w < m:
        return []
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, slots: int, cap: int, acc: list[int]) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        # each of the remaining slots needs at least 1
        hi = min(cap, remaining - (slots - 1))
        for p in range(hi, 0, -1):
            if p * slots < remaining:
                break
            acc.append(p)
            rec(remaining - p, slots - 1, p, acc)
            acc.pop()

    rec(w, m, w, [])
    return out


def count_partitions_exact(w: int, m: int) -> int:
    return len(partitions_exact(w, m))


@dataclass(frozen=True)
class YMonomial:
    """A monomial y_(j1) ... y_(jm), stored as the weakly decreasing index tuple."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(j <= 0 for j in self.parts):
            raise ValueError("indices must be positive")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("indices must be weakly decreasing")

    @property
    def charge(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def times(self, other: YMonomial) -> YMonomial:
        return YMonomial(tuple(sorted(self.parts + other.parts, reverse=True)))


def r_polynomial(k: int, w: int) -> list[tuple[YMonomial, int]]:
    """The charge-(k+1), weight-w generator as (monomial, multiplicity) pairs.

    The multiplicity of the monomial with index multiset lam is the number
    of ordered (k+1)-tuples realizing lam: (k+1)! divided by the factorials
    of the index multiplicities.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if w < k + 1:
        raise ValueError(f"no generator of weight {w} < k+1 = {k + 1}")
    out = []
    for lam in partitions_exact(w, k + 1):
        mult = math.factorial(k + 1)
        for v in set(lam):
            mult //= math.factorial(lam.count(v))
        out.append((YMonomial(lam), mult))
    return out


@dataclass(frozen=True)
class GeneratorSet:
    """All ideal generators needed up to a working weight bound.

    e is the exponent of the y_1 power generator, or None to omit it
    (for the top member e = k+1 it is redundant: the weight-(k+1)
    r-generator is exactly y_1^(k+1)).
    """

    k: int
    e: int | None
    w_max: int
    r_polys: dict[int, tuple[tuple[YMonomial, int], ...]]


def generator_set(k: int, e: int | None, w_max: int) -> GeneratorSet:
    if k < 1:
        raise ValueError("need k >= 1")
    if e is not None and not 1 <= e <= k + 1:
        raise ValueError("need 1 <= e <= k+1")
    r_polys = {
        w: tuple(r_polynomial(k, w)) for w in range(k + 1, w_max + 1)
    }
    return GeneratorSet(k=k, e=e, w_max=w_max, r_polys=r_polys)


# -- exact rank ------------------------------------------------------------------


def integer_matrix_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Rows are combined by cross-multiplication with the gcd divided out, so
    the computation never leaves the integers and never divides inexactly.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, n_rows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pval = m[rank][col]
        for r in range(rank + 1, n_rows):
            rv = m[r][col]
            if not rv:
                continue
            g = math.gcd(pval, rv)
            alpha, beta = pval // g, rv // g
            row = m[r]
            top = m[rank]
            for c in range(col, n_cols):
                row[c] = alpha * row[c] - beta * top[c]
        rank += 1
        if rank == n_rows:
            break
    return rank


# -- span and quotient dimensions ---------------------------------------------------


def ideal_span_dimension(gens: GeneratorSet, m: int, w: int) -> int:
    """Dimension of the bidegree-(m, w) piece of the ideal.

    The piece is spanned by mu * g over generators g and monomials mu of
    complementary bidegree; each product is expressed over the monomial
    basis of (m, w) and the exact rank of the resulting matrix is returned.
    """
    if m < 0 or w < 0:
        raise ValueError("need m, w >= 0")
    if w > gens.w_max:
        raise ValueError(f"weight {w} beyond generator working bound {gens.w_max}")
    basis = partitions_exact(w, m)
    if not basis:
        return 0
    index = {lam: j for j, lam in enumerate(basis)}
    rows: list[list[int]] = []

    def add_products(gen_terms, gen_charge: int, gen_weight: int) -> None:
        for mu in partitions_exact(w - gen_weight, m - gen_charge):
            row = [0] * len(basis)
            for mono, mult in gen_terms:
                merged = tuple(sorted(mu + mono.parts, reverse=True))
                row[index[merged]] += mult
            rows.append(row)

    k = gens.k
    for w_gen in range(k + 1, w + 1):
        add_products(gens.r_polys[w_gen], k + 1, w_gen)
    if gens.e is not None:
        e = gens.e
        add_products(((YMonomial((1,) * e), 1),), e, e)

    if not rows:
        return 0
    return integer_matrix_rank(rows)


def quotient_dimension(gens: GeneratorSet, m: int, w: int) -> int:
    """Dimension of the bidegree-(m, w) piece of the quotient algebra."""
    return count_partitions_exact(w, m) - ideal_span_dimension(gens, m, w)


@dataclass(frozen=True)
class DimensionTable:
    """Exact quotient dimensions on a rectangular (charge, weight) window."""

    k: int
    e: int | None
    entries: tuple[tuple[int, ...], ...]  # entries[m][w]

    @property
    def m_max(self) -> int:
        return len(self.entries) - 1

    @property
    def w_max(self) -> int:
        return len(self.entries[0]) - 1

    def dim(self, m: int, w: int) -> int:
        return self.entries[m][w]

    def to_biseries(self) -> BiSeries:
        """The table as a series with dim(m, w) at x^m q^w."""
        return BiSeries(self.m_max, self.w_max, self.entries)

    def to_tsv(self) -> str:
        lines = ["m\tw\tdim"]
        for m, row in enumerate(self.entries):
            for w, d in enumerate(row):
                lines.append(f"{m}\t{w}\t{d}")
        return "\n".join(lines) + "\n"


def hilbert_table(k: int, e: int | None, m_max: int, w_max: int) -> DimensionTable:
    """Fill the whole window of quotient dimensions for level k and exponent e."""
    if m_max < 0 or w_max < 0:
        raise ValueError("window bounds must be nonnegative")
    gens = generator_set(k, e, w_max)
    entries = tuple(
        tuple(quotient_dimension(gens, m, w) for w in range(w_max + 1))
        for m in range(m_max + 1)
    )
    return DimensionTable(k=k, e=e, entries=entries)
