import random
from fractions import Fraction

import numpy as np
import pytest

from qecc_forge.exactmat import DimensionError, ExactMatrix


def _random(dim, rng, p=None, span=9):
    re = np.array([[rng.randint(-span, span) for _ in range(dim)] for _ in range(dim)])
    im = np.array([[rng.randint(-span, span) for _ in range(dim)] for _ in range(dim)])
    return ExactMatrix(re, im, rng.randint(0, 3) if p is None else p)


def _slow(m):
    """Entries as pairs of Fractions, the slow reference semantics."""
    return [[(e.re, e.im) for e in row] for row in m.to_fractions()]


def _slow_mul(a, b):
    n = len(a)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            re = sum(a[r][j][0] * b[j][c][0] - a[r][j][1] * b[j][c][1] for j in range(n))
            im = sum(a[r][j][0] * b[j][c][1] + a[r][j][1] * b[j][c][0] for j in range(n))
            row.append((Fraction(re), Fraction(im)))
        out.append(row)
    return out


def test_identity():
    ident = ExactMatrix.identity(8)
    assert ident @ ident == ident
    assert ident.trace() == 8


def test_quarter_plus_quarter_is_half():
    a = ExactMatrix.from_rows([[1, 2], [3, 1j]])
    quarter = a.scale(1, 2)
    half = quarter + quarter
    assert half.log2den == 1
    assert half == a.scale(1, 1)


def test_canonical_form_minimal_denominator():
    m = ExactMatrix(np.array([[4, 8], [0, 12]]), None, 3)
    assert m.log2den == 1
    assert m.re.tolist() == [[1, 2], [0, 3]]
    assert ExactMatrix(np.zeros((2, 2), dtype=int), None, 5).log2den == 0


def test_canonicalization_idempotent():
    m = ExactMatrix(np.array([[6, 2], [2, 10]]), np.array([[0, 4], [-4, 0]]), 4)
    again = ExactMatrix(m.re, m.im, m.log2den)
    assert again == m
    assert again.log2den == m.log2den


@pytest.mark.parametrize("seed", range(5))
def test_arithmetic_matches_rationals(seed):
    rng = random.Random(seed)
    a, b = _random(8, rng), _random(8, rng)
    sa, sb = _slow(a), _slow(b)
    assert _slow(a + b) == [[(x[0] + y[0], x[1] + y[1]) for x, y in zip(r, s)] for r, s in zip(sa, sb)]
    assert _slow(a - b) == [[(x[0] - y[0], x[1] - y[1]) for x, y in zip(r, s)] for r, s in zip(sa, sb)]
    assert _slow(a @ b) == _slow_mul(sa, sb)


def test_adjoint_and_hermitian():
    h = ExactMatrix.from_rows([[2, 1j], [-1j, 0]])
    assert h.is_hermitian()
    n = ExactMatrix.from_rows([[0, 1j], [1j, 0]])
    assert not n.is_hermitian()
    assert n.adjoint().entry(0, 1) == complex(0, -1)


def test_idempotent():
    p = ExactMatrix.from_rows([[1, 1], [1, 1]], log2den=1)
    assert p.is_idempotent()
    assert not ExactMatrix.from_rows([[1, 1], [1, 1]]).is_idempotent()


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        ExactMatrix.identity(2) + ExactMatrix.identity(4)
    with pytest.raises(DimensionError):
        ExactMatrix(np.zeros((2, 3), dtype=int))


def test_no_silent_overflow():
    big = ExactMatrix(np.full((4, 4), 1 << 40, dtype=np.int64))
    prod = big @ big @ big
    assert int(prod.re[0, 0]) == 16 * (1 << 120)


def test_float_entries_rejected():
    with pytest.raises(TypeError):
        ExactMatrix(np.ones((2, 2)))


def test_json_roundtrip():
    m = ExactMatrix.from_rows([[2, 1j], [-1, 0]], log2den=2)
    data = m.to_json()
    assert data["log2den"] == 2
    assert data["entries"][0][1] == [0, 1]
    assert ExactMatrix.from_json(data) == m


def test_text_grid():
    m = ExactMatrix.from_rows([[2, 1j], [-1, -1j]], log2den=2)
    lines = m.to_text().splitlines()
    assert lines[0] == "1/4 *"
    assert lines[1].split() == ["2", "i"]
    assert lines[2].split() == ["-1", "-i"]
