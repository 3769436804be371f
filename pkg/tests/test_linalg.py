import itertools

import pytest
from hypothesis import given, settings, strategies as st

from modquiver.linalg import (
    IntMatrix,
    brute_force_kernel_count,
    kernel_count_mod_n,
    kernel_rank_over_z,
    snf_invariants,
)
from reference import bareiss_det, kernel_count_by_enumeration, rational_rank


def matrices(max_rows=4, max_cols=4, lo=-9, hi=9):
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: IntMatrix.from_rows(rows, c))
        )
    )


@pytest.mark.parametrize("rows,expected", [
    ([[2, 0], [0, 3]], [1, 6]),
    ([[5, 2, 5], [5, 5, 2], [2, 5, 5]], [1, 3, 36]),
    ([[0, 0], [0, 0]], [0, 0]),
    ([[4]], [4]),
    ([[-6]], [6]),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
])
def test_snf_examples(rows, expected):
    assert snf_invariants(IntMatrix.from_rows(rows)) == expected


def test_snf_divisibility_chain():
    inv = snf_invariants(IntMatrix.from_rows([[6, 0, 0], [0, 10, 0], [0, 0, 15]]))
    assert inv == [1, 30, 30]


def test_trefoil_bead_kernel_mod6():
    m = IntMatrix.from_rows([[5, 2, 5], [5, 5, 2], [2, 5, 5]])
    assert kernel_count_mod_n(m, 6) == 18
    m = IntMatrix.from_rows([[1, 0, 5], [5, 1, 0], [0, 5, 1]])
    assert kernel_count_mod_n(m, 6) == 6


def test_figure_eight_bead_kernel_mod5():
    m = IntMatrix.from_rows([[4, 3, 4, 0], [1, 3, 0, 4], [2, 0, 1, 4], [0, 1, 4, 4]])
    assert kernel_count_mod_n(m, 5) == 25


def test_empty_row_matrix_kernel_is_everything():
    assert kernel_count_mod_n(IntMatrix.zeros(0, 1), 6) == 6
    assert kernel_count_mod_n(IntMatrix.zeros(0, 3), 2) == 8


def test_zero_matrix_rank():
    assert kernel_rank_over_z(IntMatrix.zeros(3, 4)) == 4


@pytest.mark.parametrize("n", [0, 1, -3])
def test_bad_modulus(n):
    with pytest.raises(ValueError):
        kernel_count_mod_n(IntMatrix.from_rows([[1]]), n)


def test_brute_force_bound():
    with pytest.raises(ValueError):
        brute_force_kernel_count(IntMatrix.zeros(1, 8), 8, bound=1000)


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])


@settings(max_examples=600, deadline=None)
@given(st.integers(1, 8).flatmap(
    lambda c: st.tuples(
        st.just(c),
        st.integers(2, 8),
        st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c), max_size=5),
    )
).filter(lambda a: a[1] ** a[0] <= 20000))
def test_kernel_count_matches_enumeration(args):
    cols, n, rows = args
    m = IntMatrix.from_rows(rows, cols)
    assert kernel_count_mod_n(m, n) == kernel_count_by_enumeration(rows, cols, n)


@settings(max_examples=200, deadline=None)
@given(matrices(), st.integers(2, 7), st.randoms(use_true_random=False))
def test_invariants_unchanged_by_permutation_and_negation(m, n, rnd):
    rows = m.to_rows()
    rnd.shuffle(rows)
    perm = list(range(m.cols))
    rnd.shuffle(perm)
    rows = [[(-1 if i % 2 else 1) * r[j] for j in perm] for i, r in enumerate(rows)]
    other = IntMatrix.from_rows(rows, m.cols)
    assert snf_invariants(other) == snf_invariants(m)
    assert kernel_count_mod_n(other, n) == kernel_count_mod_n(m, n)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda k: st.lists(st.lists(st.integers(-9, 9), min_size=k, max_size=k), min_size=k, max_size=k)
))
def test_square_invariants_multiply_to_determinant(rows):
    prod = 1
    for d in snf_invariants(IntMatrix.from_rows(rows)):
        prod *= d
    assert prod == abs(bareiss_det(rows))


@settings(max_examples=200, deadline=None)
@given(matrices(5, 5))
def test_rank_matches_rational_elimination(m):
    assert kernel_rank_over_z(m) == m.cols - rational_rank(m.to_rows(), m.cols)


@settings(max_examples=200, deadline=None)
@given(matrices(4, 4), st.integers(2, 6))
def test_invariants_form_divisibility_chain(m, n):
    inv = snf_invariants(m)
    assert len(inv) == m.rows
    nz = [d for d in inv if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    # zeros come last
    assert inv[: len(nz)] == nz


def test_kernel_times_image_is_module_size():
    # |ker| * |im| = n^cols for the map Z_n^cols -> Z_n^rows
    for rows in ([[2, 4], [1, 3]], [[3, 3, 0]], [[0, 0]], [[1, 2, 3], [2, 4, 6]]):
        cols = len(rows[0])
        for n in (2, 4, 6):
            image = {
                tuple(sum(r[j] * v[j] for j in range(cols)) % n for r in rows)
                for v in itertools.product(range(n), repeat=cols)
            }
            m = IntMatrix.from_rows(rows)
            assert kernel_count_mod_n(m, n) * len(image) == n ** cols
