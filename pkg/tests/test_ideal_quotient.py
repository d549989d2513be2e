"""The ideal-quotient route: generators, exact rank, and dimension tables."""

import random
from fractions import Fraction

import pytest

from qgordon import (
    YMonomial,
    andrews_gordon_multisum,
    count_partitions_exact,
    generator_set,
    hilbert_table,
    ideal_span_dimension,
    integer_matrix_rank,
    partitions_exact,
    quotient_dimension,
    r_polynomial,
    solve,
)

# multisum at window (4, 10) for level 1, vacuum member; computed once by an
# independent brute-force tuple enumeration and frozen here
LEVEL1_E2_TABLE = {
    (0, 0): 1,
    (1, 1): 1, (1, 2): 1, (1, 3): 1, (1, 4): 1, (1, 5): 1,
    (1, 6): 1, (1, 7): 1, (1, 8): 1, (1, 9): 1, (1, 10): 1,
    (2, 4): 1, (2, 5): 1, (2, 6): 2, (2, 7): 2, (2, 8): 3,
    (2, 9): 3, (2, 10): 4,
    (3, 9): 1, (3, 10): 1,
}


def rational_rank(rows):
    """Plain Gaussian elimination over Fraction, as an independent rank oracle."""
    m = [[Fraction(c) for c in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [c * inv for c in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [c - factor * p for c, p in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_partitions_exact():
    assert partitions_exact(4, 2) == [(3, 1), (2, 2)]
    assert partitions_exact(0, 0) == [()]
    assert partitions_exact(3, 0) == []
    assert partitions_exact(2, 3) == []
    assert partitions_exact(6, 3) == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert count_partitions_exact(10, 4) == len(partitions_exact(10, 4))


def test_ymonomial():
    m = YMonomial((3, 1, 1))
    assert m.charge == 3 and m.weight == 5
    assert m.times(YMonomial((2,))) == YMonomial((3, 2, 1, 1))
    with pytest.raises(ValueError):
        YMonomial((1, 3))


def test_r_polynomial_small():
    assert r_polynomial(1, 2) == [(YMonomial((1, 1)), 1)]
    assert r_polynomial(1, 3) == [(YMonomial((2, 1)), 2)]
    assert r_polynomial(1, 4) == [(YMonomial((3, 1)), 2), (YMonomial((2, 2)), 1)]
    with pytest.raises(ValueError):
        r_polynomial(1, 1)


def test_r_polynomial_multiplicities_count_orderings():
    # multiplicities must total the number of ordered tuples, i.e. the number
    # of compositions of w into k+1 positive parts
    for k in (1, 2, 3):
        for w in range(k + 1, k + 7):
            total = sum(mult for _, mult in r_polynomial(k, w))
            compositions = 0
            def count(rem, slots):
                nonlocal compositions
                if slots == 0:
                    compositions += rem == 0
                    return
                for p in range(1, rem - slots + 2):
                    count(rem - p, slots - 1)
            count(w, k + 1)
            assert total == compositions


def test_top_weight_generator_is_pure_power():
    # the smallest r generator coincides with y_1^(k+1)
    for k in (1, 2, 3, 4):
        assert r_polynomial(k, k + 1) == [(YMonomial((1,) * (k + 1)), 1)]


def test_integer_matrix_rank_frozen():
    assert integer_matrix_rank([]) == 0
    assert integer_matrix_rank([[0, 0], [0, 0]]) == 0
    assert integer_matrix_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert integer_matrix_rank([[2, 4], [1, 2]]) == 1
    assert integer_matrix_rank([[2, 3], [3, 5]]) == 2
    assert integer_matrix_rank([[0, 2, 1], [0, 4, 2], [1, 0, 7]]) == 2


def test_integer_matrix_rank_randomized():
    rng = random.Random(1729)
    for _ in range(200):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        m = [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rows)]
        assert integer_matrix_rank(m) == rational_rank(m)


def test_ideal_span_examples():
    gens = generator_set(1, 2, 8)
    assert ideal_span_dimension(gens, 2, 2) == 1
    assert ideal_span_dimension(gens, 2, 4) == 1
    assert ideal_span_dimension(gens, 0, 0) == 0


def test_quotient_examples():
    gens = generator_set(1, 2, 8)
    for w in range(1, 9):
        assert quotient_dimension(gens, 1, w) == 1
    assert quotient_dimension(gens, 2, 4) == 1
    gens_e1 = generator_set(1, 1, 4)
    assert quotient_dimension(gens_e1, 1, 1) == 0


def test_span_working_bound_enforced():
    gens = generator_set(1, 2, 6)
    with pytest.raises(ValueError):
        ideal_span_dimension(gens, 2, 7)


def test_generator_set_validation():
    with pytest.raises(ValueError):
        generator_set(1, 3, 6)
    with pytest.raises(ValueError):
        generator_set(0, 1, 6)


def test_hilbert_table_level_one_frozen():
    table = hilbert_table(1, 2, 4, 10)
    got = {(m, w): d for m, w, d in table.to_biseries().terms()}
    assert got == LEVEL1_E2_TABLE
    assert table.entries[0] == (1,) + (0,) * 10


def test_hilbert_table_matches_multisum_and_solver():
    for k, e_range, (mm, wm) in [(1, (1, 2), (4, 10)), (2, (1, 2, 3), (3, 8))]:
        fam = solve(k, mm, wm)
        for e in e_range:
            i = e - 1
            series = hilbert_table(k, e, mm, wm).to_biseries()
            assert series == andrews_gordon_multisum(k, i, mm, wm)
            assert series == fam.members[i]


def test_y_power_redundant_at_top_exponent():
    # omitting y_1^(k+1) changes nothing: it already appears among the r's
    for k in (1, 2):
        with_power = hilbert_table(k, k + 1, 3, 8)
        without = hilbert_table(k, None, 3, 8)
        assert with_power.entries == without.entries


def test_quotient_monotone_in_exponent():
    k, mm, wm = 2, 3, 8
    tables = [hilbert_table(k, e, mm, wm) for e in (1, 2, 3)]
    for lo, hi in zip(tables, tables[1:]):
        for m in range(mm + 1):
            for w in range(wm + 1):
                assert lo.dim(m, w) <= hi.dim(m, w)


def test_rank_bounds():
    gens = generator_set(2, 2, 9)
    for m in range(5):
        for w in range(10):
            r = ideal_span_dimension(gens, m, w)
            assert 0 <= r <= count_partitions_exact(w, m)


def test_table_tsv_shape():
    table = hilbert_table(1, 1, 1, 2)
    lines = table.to_tsv().splitlines()
    assert lines[0] == "m\tw\tdim"
    assert len(lines) == 1 + 2 * 3
    assert lines[1] == "0\t0\t1"
