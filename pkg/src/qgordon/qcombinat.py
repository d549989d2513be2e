"""q-Pochhammer symbols, Gordon partition counting, and the Andrews-Gordon multisum.

The classical Rogers-Ramanujan-Gordon circle of identities relates three
different objects, all computed here with exact integer arithmetic:

* the product side: partitions into parts in admissible residue classes
  mod 2l+1 (``gordon_product``, ``count_congruence_partitions``);
* the combinatorial side: partitions obeying the "difference two at
  distance l-1" condition with a bounded number of ones
  (``count_gordon_partitions`` and its refinement by number of parts);
* the analytic side: the Andrews-Gordon multisum with quadratic exponent
  (``andrews_gordon_multisum``), a bivariate series whose x-power tracks
  the number of parts.

Counting functions enumerate partitions outright, so they are independent
of the series arithmetic and usable as brute-force cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .series import BiSeries, one, invert_one_minus_q_power


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; charge = number of parts, weight = sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("parts must be weakly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def charge(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class GordonCondition:
    """Parameter pair (l, t) with l >= 2 and 1 <= t <= l.

    Picks out partitions with b_j - b_(j+l-1) >= 2 and at most t-1 parts
    equal to 1, or dually partitions into parts not congruent to
    0, +-t mod 2l+1. The corresponding recursion-system indices are
    level k = l - 1 and member i = t - 1.
    """

    l: int
    t: int

    def __post_init__(self):
        if self.l < 2:
            raise ValueError("need l >= 2")
        if not 1 <= self.t <= self.l:
            raise ValueError("need 1 <= t <= l")

    @property
    def level(self) -> int:
        return self.l - 1

    @property
    def modulus(self) -> int:
        return 2 * self.l + 1

    @property
    def excluded_residues(self) -> frozenset[int]:
        return frozenset({0, self.t, self.modulus - self.t})

    def allows_part(self, p: int) -> bool:
        return p % self.modulus not in self.excluded_residues


# -- q-Pochhammer -------------------------------------------------------------


def pochhammer(n: int, q_order: int) -> BiSeries:
    """(1-q)(1-q^2)...(1-q^n) truncated at q_order; the empty product is 1."""
    if n < 0:
        raise ValueError("need n >= 0")
    N = q_order
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for i in range(1, n + 1):
        # multiply in place by (1 - q^i), highest power first
        for b in range(N, i - 1, -1):
            coeffs[b] -= coeffs[b - i]
    return BiSeries(0, N, [coeffs])


def inverse_pochhammer(n: int, q_order: int) -> BiSeries:
    """1/((1-q)...(1-q^n)): the generating function of partitions into parts <= n."""
    if n < 0:
        raise ValueError("need n >= 0")
    N = q_order
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for i in range(1, n + 1):
        for b in range(i, N + 1):
            coeffs[b] += coeffs[b - i]
    return BiSeries(0, N, [coeffs])


def gordon_product(cond: GordonCondition, q_order: int) -> BiSeries:
    """Product of 1/(1-q^i) over i <= q_order in the admissible residue classes.

    Factors whose smallest exponent exceeds the window are identically 1
    there and are skipped. One geometric-series factor is multiplied in at
    a time, truncating after each, so intermediates stay O(q_order).
    """
    if q_order < 0:
        raise ValueError("need q_order >= 0")
    result = one(0, q_order)
    for i in range(1, q_order + 1):
        if cond.allows_part(i):
            result = result * invert_one_minus_q_power(i, 0, q_order)
    return result


# -- Andrews-Gordon multisum ----------------------------------------------------


def andrews_gordon_multisum(k: int, i: int, x_order: int, q_order: int) -> BiSeries:
    """Sum over weakly decreasing tuples N_1 >= ... >= N_k >= 0 of

        x^(N_1+...+N_k) q^(N_1^2+...+N_k^2+N_(i+1)+...+N_k)
        / ((q)_(N_1-N_2) ... (q)_(N_(k-1)-N_k) (q)_(N_k))

    truncated to the window. Tuples whose x-power exceeds x_order or whose
    minimal q-exponent exceeds q_order contribute nothing and are pruned.
    """
    if k < 1:
        raise ValueError("need level k >= 1")
    if not 0 <= i <= k:
        raise ValueError("need 0 <= i <= k")
    R, N = x_order, q_order
    rows = [[0] * (N + 1) for _ in range(R + 1)]

    inv_cache: dict[int, tuple[int, ...]] = {}

    def inv_row(n: int) -> tuple[int, ...]:
        if n not in inv_cache:
            inv_cache[n] = inverse_pochhammer(n, N).row(0)
        return inv_cache[n]

    def emit(tup: tuple[int, ...]) -> None:
        m = sum(tup)
        energy = sum(v * v for v in tup) + sum(tup[i:])
        if m > R or energy > N:
            return
        # denominator factors, aligned with the difference variables
        diffs = [tup[j] - tup[j + 1] for j in range(k - 1)] + [tup[k - 1]]
        den = [0] * (N - energy + 1)
        den[0] = 1
        for d in diffs:
            if d == 0:
                continue
            src = inv_row(d)
            nxt = [0] * len(den)
            for b1, c1 in enumerate(den):
                if not c1:
                    continue
                for b2 in range(len(den) - b1):
                    c2 = src[b2]
                    if c2:
                        nxt[b1 + b2] += c1 * c2
            den = nxt
        target = rows[m]
        for b, c in enumerate(den):
            if c:
                target[energy + b] += c

    # build tuples from N_k upward; values are weakly increasing toward N_1
    def extend(pos: int, tup: tuple[int, ...], m: int, sq: int) -> None:
        if pos == 0:
            emit(tup)
            return
        low = tup[0] if tup else 0
        v = low
        while True:
            # remaining pos slots each hold at least v
            if m + pos * v > R or sq + pos * v * v > N:
                break
            extend(pos - 1, (v,) + tup, m + v, sq + v * v)
            v += 1

    extend(k, (), 0, 0)
    return BiSeries(R, N, rows)


# -- partition counting ---------------------------------------------------------


def iter_gordon_partitions(cond: GordonCondition, n: int) -> Iterator[Partition]:
    """Enumerate partitions of n with difference >= 2 at distance l-1 and
    at most t-1 ones, in decreasing lexicographic order.

    Parts are chosen largest-first; the distance condition only ever
    constrains the new part against the (l-1)-th most recent choice, so a
    sliding window of the last l-1 parts suffices.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    k = cond.l - 1
    max_ones = cond.t - 1

    def rec(remaining: int, cap: int, window: tuple[int, ...], ones: int, acc: list[int]):
        if remaining == 0:
            yield Partition(tuple(acc))
            return
        hi = min(remaining, cap)
        if len(window) == k:
            hi = min(hi, window[0] - 2)
        for p in range(hi, 0, -1):
            if p == 1 and ones >= max_ones:
                break
            acc.append(p)
            yield from rec(
                remaining - p, p, (window + (p,))[-k:], ones + (p == 1), acc
            )
            acc.pop()

    yield from rec(n, n, (), 0, [])


def count_gordon_partitions(cond: GordonCondition, n: int) -> int:
    """Number of partitions of n meeting the Gordon difference/ones condition."""
    return sum(1 for _ in iter_gordon_partitions(cond, n))


def count_gordon_partitions_refined(cond: GordonCondition, n: int, m: int) -> int:
    """As count_gordon_partitions, restricted to exactly m parts."""
    if m < 0:
        raise ValueError("need m >= 0")
    return sum(1 for p in iter_gordon_partitions(cond, n) if p.charge == m)


def count_congruence_partitions(cond: GordonCondition, n: int) -> int:
    """Number of partitions of n into parts not congruent to 0, +-t mod 2l+1.

    Plain recursive enumeration over admissible parts in decreasing order,
    with no generating functions involved.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    allowed = [p for p in range(n, 0, -1) if cond.allows_part(p)]

    def rec(remaining: int, start: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for j in range(start, len(allowed)):
            p = allowed[j]
            if p <= remaining:
                total += rec(remaining - p, j)
        return total

    return rec(n, 0)


def min_gordon_weight(level: int, m: int) -> int:
    """Least possible weight of an m-part partition with difference >= 2 at
    distance `level`, ignoring any restriction on ones.

    Attained by level copies each of 1, 3, 5, ...; with m = u*level + v the
    minimum is level*u^2 + v*(2u+1). Restricting ones only raises the
    minimum, so this is a valid lower bound for every (l, t).
    """
    if level < 1:
        raise ValueError("need level >= 1")
    if m < 0:
        raise ValueError("need m >= 0")
    u, v = divmod(m, level)
    return level * u * u + v * (2 * u + 1)
