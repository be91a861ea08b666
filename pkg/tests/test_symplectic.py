import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qecc_forge.codebook import LAFLAMME_ROWS, additive_2m
from qecc_forge.symplectic import (
    SymplecticMatrix,
    enumerate_errors,
    error_count,
    gf2_rank,
    gram_matrix,
    is_lagrangian,
    standard_form,
    swap_halves,
    symplectic_complete,
    symplectic_product,
    symplectic_weight,
    vec_from_str,
    vec_to_str,
)

from conftest import random_lagrangian


def _weight_naive(v, k):
    a, b = v >> k, v & ((1 << k) - 1)
    return sum(1 for q in range(k) if (a >> q) & 1 or (b >> q) & 1)


@pytest.mark.parametrize("k", range(1, 7))
def test_error_enumeration_matches_filter(k):
    for dmax in range(0, k + 1):
        naive = sorted(
            (v for v in range(1, 1 << (2 * k)) if _weight_naive(v, k) <= dmax),
            key=lambda v: (_weight_naive(v, k), v),
        )
        got = list(enumerate_errors(k, dmax))
        assert got == naive
        assert len(got) == error_count(k, dmax)


def test_error_counts():
    assert error_count(5, 1) == 15
    assert error_count(5, 2) == 105
    with pytest.raises(ValueError):
        list(enumerate_errors(3, 4))


def test_symplectic_product_examples():
    assert symplectic_product(vec_from_str("10|01")[0], vec_from_str("01|10")[0], 2) == 0
    assert symplectic_product(vec_from_str("1|0")[0], vec_from_str("0|1")[0], 1) == 1


@given(st.integers(1, 6).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, (1 << 2 * k) - 1), st.integers(0, (1 << 2 * k) - 1))))
def test_product_is_symmetric_and_alternating(args):
    k, u, v = args
    assert symplectic_product(u, v, k) == symplectic_product(v, u, k)
    assert symplectic_product(u, u, k) == 0
    assert symplectic_weight(u, k) == _weight_naive(u, k)
    assert swap_halves(swap_halves(u, k), k) == u


def test_vec_string_roundtrip():
    for text in ("10|01", "0110|1001", "1|1"):
        v, k = vec_from_str(text)
        assert vec_to_str(v, k) == text
    with pytest.raises(ValueError):
        vec_from_str("10|0")


def test_columns_rows_roundtrip(rng):
    for k in range(1, 7):
        cols = [rng.randrange(1 << k) for _ in range(2 * k)]
        A = SymplecticMatrix.from_columns(cols)
        assert list(A.columns) == cols
        assert SymplecticMatrix.from_strings(A.row_strings()) == A
        assert SymplecticMatrix.from_text(A.to_text()) == A


def test_column_storage_msb_first():
    A = additive_2m(2).A
    assert A.column(1) == 4


@given(st.integers(1, 5).flatmap(lambda k: st.tuples(
    st.just(k),
    st.lists(st.integers(0, (1 << k) - 1), min_size=2 * k, max_size=2 * k),
    st.integers(0, (1 << 2 * k) - 1),
    st.integers(0, (1 << 2 * k) - 1),
)))
def test_mat_vec_linear(args):
    k, cols, u, v = args
    A = SymplecticMatrix.from_columns(cols)
    assert A.mat_vec(u ^ v) == A.mat_vec(u) ^ A.mat_vec(v)
    # A w is the XOR of the columns selected by w
    expected = 0
    for i in range(2 * k):
        if u >> (2 * k - 1 - i) & 1:
            expected ^= cols[i]
    assert A.mat_vec(u) == expected


def test_laflamme_rows():
    A = SymplecticMatrix.from_strings(LAFLAMME_ROWS)
    assert A.rank() == 5
    assert A.is_lagrangian()


def test_lagrangian_rejects_dependent_and_noncommuting():
    assert not is_lagrangian([0b1000, 0b1000], 2)
    assert not is_lagrangian([0b1000, 0b0010], 2)
    assert is_lagrangian([0b1000, 0b0100], 2)


def test_gf2_rank():
    assert gf2_rank([1, 2, 3]) == 2
    assert gf2_rank([]) == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_completion_gram_is_standard(k):
    rng = random.Random(k)
    for _ in range(10):
        z = random_lagrangian(k, rng)
        x = symplectic_complete(z, k)
        assert gram_matrix(z + x, k) == standard_form(k)


def test_completion_of_additive_rows():
    z = list(additive_2m(2).A.rows)
    x = symplectic_complete(z, 4)
    assert gram_matrix(z + x, 4) == standard_form(4)


def test_completion_rejects_bad_input():
    with pytest.raises(ValueError):
        symplectic_complete([0b1000, 0b0010], 2)


def test_gram_brute_force():
    rows = [vec_from_str(r)[0] for r in LAFLAMME_ROWS]
    g = gram_matrix(rows, 5)
    for i, j in itertools.product(range(5), repeat=2):
        assert g[i][j] == symplectic_product(rows[i], rows[j], 5)
