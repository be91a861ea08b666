"""GF(2) symplectic geometry on length-2k binary vectors.

A vector ``(a|b)`` is held as a Python int whose binary expansion, read
MSB-first over ``2k`` places, is ``a_1 ... a_k b_1 ... b_k``.  So ``a = v >> k``
and ``b = v & (2**k - 1)``, and qubit 1 is the most significant bit of each
half.  Columns of a ``k x 2k`` matrix are ints of ``k`` bits with row 1 as the
most significant bit.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator, Sequence


def _mask(k: int) -> int:
    return (1 << k) - 1


def parity(x: int) -> int:
    return x.bit_count() & 1


def symplectic_product(u: int, v: int, k: int) -> int:
    """``a.b' xor a'.b`` for ``u = (a|b)``, ``v = (a'|b')``."""
    lim = 1 << (2 * k)
    if not (0 <= u < lim and 0 <= v < lim):
        raise ValueError(f"vectors do not fit in length {2 * k}")
    m = _mask(k)
    return parity(((u >> k) & v & m) ^ ((v >> k) & u & m))


def symplectic_weight(v: int, k: int) -> int:
    """Number of qubits on which the X- or Z-part is nonzero."""
    return ((v >> k) | (v & _mask(k))).bit_count()


def swap_halves(v: int, k: int) -> int:
    """``(a|b) -> (b|a)``; ``u . swap(w)`` is the symplectic product of ``u`` and ``w``."""
    return ((v & _mask(k)) << k) | (v >> k)


def vec_to_str(v: int, k: int, sep: str = "|") -> str:
    s = format(v, f"0{2 * k}b")
    return s[:k] + sep + s[k:]


def vec_from_str(text: str, k: int | None = None) -> tuple[int, int]:
    """Parse ``"0110|1001"`` (separator optional); returns ``(vector, k)``."""
    s = text.strip().replace(" ", "")
    if "|" in s:
        left, _, right = s.partition("|")
        if len(left) != len(right):
            raise ValueError(f"unbalanced halves in {text!r}")
        s = left + right
    if not s or set(s) - {"0", "1"} or len(s) % 2:
        raise ValueError(f"not an even-length binary vector: {text!r}")
    kk = len(s) // 2
    if k is not None and kk != k:
        raise ValueError(f"expected length {2 * k}, got {len(s)}")
    return int(s, 2), kk


def unit(i: int, k: int) -> int:
    """Unit vector with a single 1 at position ``i`` (1-based, of 2k)."""
    if not 1 <= i <= 2 * k:
        raise ValueError(f"position {i} out of range for k={k}")
    return 1 << (2 * k - i)


# -- GF(2) elimination ---------------------------------------------------------


def gf2_rank(rows: Sequence[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def is_lagrangian(rows: Sequence[int], k: int) -> bool:
    """Rows are linearly independent and pairwise symplectic-orthogonal."""
    if gf2_rank(rows) != len(rows):
        return False
    return all(symplectic_product(u, v, k) == 0 for u, v in itertools.combinations(rows, 2))


def solve_gf2(rows: Sequence[int], rhs: Sequence[int], nbits: int) -> int | None:
    """A solution ``x`` of ``parity(rows[i] & x) == rhs[i]`` for all ``i``, or None.

    Free variables are set to 0, so the answer is deterministic.
    """
    aug = [(r, b & 1) for r, b in zip(rows, rhs)]
    pivots: list[tuple[int, int, int]] = []
    for r, b in aug:
        for col, pr, pb in pivots:
            if r >> col & 1:
                r ^= pr
                b ^= pb
        if r == 0:
            if b:
                return None
            continue
        col = r.bit_length() - 1
        new = []
        for c2, pr, pb in pivots:
            if pr >> col & 1:
                pr ^= r
                pb ^= b
            new.append((c2, pr, pb))
        pivots = new + [(col, r, b)]
    x = 0
    for col, _, b in pivots:
        if b:
            x |= 1 << col
    if x >= 1 << nbits:
        raise AssertionError("solution exceeds declared width")
    return x


def symplectic_complete(z_rows: Sequence[int], k: int) -> list[int]:
    """Conjugate rows ``X_j`` with ``X_j.Z_l = [j == l]`` and ``X_j.X_l = 0``.

    Each ``X_j`` is the canonical solution of a linear system against the
    Z rows, then made isotropic against earlier X rows by adding Z rows.
    """
    if len(z_rows) != k or not is_lagrangian(z_rows, k):
        raise ValueError("input rows are not a Lagrangian set of size k")
    # u.swap(z) == symplectic product of u and z
    system = [swap_halves(z, k) for z in z_rows]
    xs: list[int] = []
    for j in range(k):
        x = solve_gf2(system, [int(l == j) for l in range(k)], 2 * k)
        if x is None:
            raise ValueError("symplectic completion failed")
        for l, xl in enumerate(xs):
            if symplectic_product(x, xl, k):
                x ^= z_rows[l]
        xs.append(x)
    return xs


def gram_matrix(vectors: Sequence[int], k: int) -> list[list[int]]:
    return [[symplectic_product(u, v, k) for v in vectors] for u in vectors]


def standard_form(k: int) -> list[list[int]]:
    """Gram matrix of ``(Z_1..Z_k, X_1..X_k)`` for a symplectic basis."""
    return [[int((i < k) != (j < k) and i % k == j % k) for j in range(2 * k)] for i in range(2 * k)]


# -- error enumeration ----------------------------------------------------------


def error_count(k: int, dmax: int) -> int:
    return sum(comb(k, j) * 3**j for j in range(1, dmax + 1))


def errors_of_weight(k: int, weight: int) -> list[int]:
    """All vectors of exact symplectic weight ``weight``, ascending."""
    out = []
    for qubits in itertools.combinations(range(k), weight):
        for slots in itertools.product((1, 2, 3), repeat=weight):
            a = b = 0
            for q, s in zip(qubits, slots):
                bit = 1 << (k - 1 - q)
                if s & 2:
                    a |= bit
                if s & 1:
                    b |= bit
            out.append((a << k) | b)
    out.sort()
    return out


def enumerate_errors(k: int, dmax: int) -> Iterator[int]:
    """Nonzero vectors of symplectic weight ``<= dmax``: by weight, then lexicographically."""
    if dmax > k:
        raise ValueError(f"weight bound {dmax} exceeds qubit count {k}")
    if dmax < 0:
        raise ValueError("weight bound must be non-negative")
    for w in range(1, dmax + 1):
        yield from errors_of_weight(k, w)


# -- the k x 2k matrix -----------------------------------------------------------


@dataclass(frozen=True)
class SymplecticMatrix:
    """A ``k x 2k`` binary matrix stored by rows."""

    k: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if len(self.rows) != self.k:
            raise ValueError(f"expected {self.k} rows, got {len(self.rows)}")
        lim = 1 << (2 * self.k)
        for r in self.rows:
            if not 0 <= r < lim:
                raise ValueError(f"row {r} does not fit in {2 * self.k} bits")

    @classmethod
    def from_columns(cls, columns: Sequence[int], k: int | None = None) -> SymplecticMatrix:
        if len(columns) % 2:
            raise ValueError("need an even number of columns")
        k = len(columns) // 2 if k is None else k
        if len(columns) != 2 * k:
            raise ValueError(f"expected {2 * k} columns, got {len(columns)}")
        for c in columns:
            if not 0 <= c < 1 << k:
                raise ValueError(f"column {c} does not fit in {k} bits")
        rows = []
        for j in range(k):
            bit = k - 1 - j
            r = 0
            for c in columns:
                r = (r << 1) | (c >> bit & 1)
            rows.append(r)
        return cls(k, tuple(rows))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> SymplecticMatrix:
        rows = []
        k = None
        for line in lines:
            v, kk = vec_from_str(line)
            if k is None:
                k = kk
            elif kk != k:
                raise ValueError("rows have different lengths")
            rows.append(v)
        if k is None:
            raise ValueError("no rows")
        return cls(k, tuple(rows))

    @classmethod
    def from_text(cls, text: str) -> SymplecticMatrix:
        stripped = text.strip()
        if stripped.startswith("{"):
            data = json.loads(stripped)
            m = cls.from_strings(data["rows"])
            if "k" in data and int(data["k"]) != m.k:
                raise ValueError("declared k does not match row length")
            return m
        return cls.from_strings([ln for ln in stripped.splitlines() if ln.strip()])

    @cached_property
    def columns(self) -> tuple[int, ...]:
        k = self.k
        cols = []
        for i in range(2 * k):
            bit = 2 * k - 1 - i
            c = 0
            for r in self.rows:
                c = (c << 1) | (r >> bit & 1)
            cols.append(c)
        return tuple(cols)

    def column(self, i: int) -> int:
        """Column ``x_i`` (1-based) as an integer, row 1 most significant."""
        return self.columns[i - 1]

    def row(self, j: int) -> int:
        return self.rows[j - 1]

    def mat_vec(self, w: int) -> int:
        """``A . w^T`` over GF(2), as an integer with row 1 most significant."""
        if not 0 <= w < 1 << (2 * self.k):
            raise ValueError(f"vector does not fit in {2 * self.k} bits")
        out = 0
        for r in self.rows:
            out = (out << 1) | parity(r & w)
        return out

    def rank(self) -> int:
        return gf2_rank(self.rows)

    def is_lagrangian(self) -> bool:
        return is_lagrangian(self.rows, self.k)

    def row_strings(self, sep: str = "|") -> list[str]:
        return [vec_to_str(r, self.k, sep) for r in self.rows]

    def to_text(self) -> str:
        return "\n".join(self.row_strings())

    def to_json(self) -> dict:
        return {"k": self.k, "rows": self.row_strings()}
