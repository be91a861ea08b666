import random

import pytest

from qecc_forge.symplectic import is_lagrangian


def autocorrelation_double_loop(truth):
    """Direct O(4^m) evaluation of r(a) = sum_v (-1)^(f(v) ^ f(v ^ a))."""
    n = len(truth)
    return [sum((-1) ** (truth[v] ^ truth[v ^ a]) for v in range(n)) for a in range(n)]


def random_lagrangian(k, rng):
    """Random k independent pairwise-commuting rows, by rejection."""
    while True:
        rows = []
        for _ in range(200):
            v = rng.randrange(1, 1 << (2 * k))
            if is_lagrangian(rows + [v], k):
                rows.append(v)
                if len(rows) == k:
                    return rows
        # restart if stuck


@pytest.fixture
def rng():
    return random.Random(20071)


EXAMPLE5_ROWS = ("100|010", "011|110", "001|011")
EXAMPLE5_F = "v1 ^ v1 v2 ^ v3"
EXAMPLE5_GRID = [
    [2, 1j, -1, 0, 0, -1j, 1, 0],
    [-1j, 2, 0, 1, 1j, 0, 0, -1],
    [-1, 0, 2, -1j, -1, 0, 0, -1j],
    [0, 1, 1j, 2, 0, 1, 1j, 0],
    [0, -1j, -1, 0, 2, 1j, 1, 0],
    [1j, 0, 0, 1, -1j, 2, 0, -1],
    [1, 0, 0, -1j, 1, 0, 2, -1j],
    [0, -1, 1j, 0, 0, -1, 1j, 2],
]


def example5_family():
    from qecc_forge.projlogic import family_from_rows
    from qecc_forge.symplectic import vec_from_str

    return family_from_rows([vec_from_str(r)[0] for r in EXAMPLE5_ROWS], 3)
