"""Heisenberg-Weyl group elements ``i^e * E_(a|b)``.

Conventions: ``E_(a|b)`` is the tensor product of ``I, X, Z, Y`` for
``(a_i, b_i) = 00, 10, 01, 11`` with qubit 1 the most significant tensor slot,
and ``Y = [[0, i], [-i, 0]]``.  That is the negative of the usual Pauli Y
(``Y_here = -Y_usual``, equivalently ``X Z = i Y_here``).  Under this choice
``E_(a|b) = (-i)^(a.b) X^a Z^b`` is Hermitian, squares to the identity, and
products follow

    E_(a,b) E_(a',b') = i^(2 b.a' + |(a^a')(b^b')| - a.b - a'.b') E_(a^a', b^b')

with every dot product counted over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exactmat import ExactMatrix
from .symplectic import _mask, symplectic_product, vec_from_str

MAX_DENSE_QUBITS = 12

_PHASE_NAMES = {0: "+1", 1: "+i", 2: "-1", 3: "-i"}
_PHASE_PARSE = {"+1": 0, "1": 0, "+": 0, "+i": 1, "i": 1, "-1": 2, "-": 2, "-i": 3}


@dataclass(frozen=True)
class PauliElement:
    """Phase ``i**phase`` times ``E_vec`` on ``k`` qubits."""

    k: int
    vec: int
    phase: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if not 0 <= self.vec < 1 << (2 * self.k):
            raise ValueError(f"vector does not fit in {2 * self.k} bits")
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def a(self) -> int:
        return self.vec >> self.k

    @property
    def b(self) -> int:
        return self.vec & _mask(self.k)

    @classmethod
    def identity(cls, k: int) -> PauliElement:
        return cls(k, 0)

    @classmethod
    def from_string(cls, text: str) -> PauliElement:
        """Parse ``"ZXXZI"`` or ``"-iXYZ"``; also accepts ``"0110|1001"`` bit form."""
        s = text.strip()
        phase = 0
        for prefix in ("+1", "-1", "+i", "-i", "+", "-", "i"):
            if s.startswith(prefix) and len(s) > len(prefix) and s[len(prefix)] in "IXYZ":
                phase = _PHASE_PARSE[prefix]
                s = s[len(prefix):]
                break
        if s and set(s) <= {"0", "1", "|"}:
            vec, k = vec_from_str(s)
            return cls(k, vec, phase)
        if not s or set(s) - set("IXYZ"):
            raise ValueError(f"invalid Pauli string {text!r}")
        k = len(s)
        a = b = 0
        for ch in s:
            a = (a << 1) | (ch in "XY")
            b = (b << 1) | (ch in "ZY")
        return cls(k, (a << k) | b, phase)

    def label(self) -> str:
        k = self.k
        out = []
        for q in range(k):
            bit = k - 1 - q
            out.append("IZXY"[(self.a >> bit & 1) * 2 + (self.b >> bit & 1)])
        return "".join(out)

    def __str__(self) -> str:
        return ("" if self.phase == 0 else _PHASE_NAMES[self.phase]) + self.label()

    def _check(self, other: PauliElement) -> None:
        if self.k != other.k:
            raise ValueError(f"qubit counts differ: {self.k} vs {other.k}")

    def __mul__(self, other: PauliElement) -> PauliElement:
        self._check(other)
        a, b, a2, b2 = self.a, self.b, other.a, other.b
        ipow = (
            2 * (b & a2).bit_count()
            + ((a ^ a2) & (b ^ b2)).bit_count()
            - (a & b).bit_count()
            - (a2 & b2).bit_count()
        )
        phase = self.phase + other.phase + ipow
        return PauliElement(self.k, self.vec ^ other.vec, phase)

    def commutes(self, other: PauliElement) -> bool:
        self._check(other)
        return symplectic_product(self.vec, other.vec, self.k) == 0

    def to_matrix(self) -> ExactMatrix:
        if self.k > MAX_DENSE_QUBITS:
            raise ValueError(f"k={self.k} too large for dense realization (max {MAX_DENSE_QUBITS})")
        dim = 1 << self.k
        cols = np.arange(dim, dtype=np.int64)
        rows = cols ^ self.a
        expo = _column_phases(self, cols)
        re = np.zeros((dim, dim), dtype=np.int64)
        im = np.zeros((dim, dim), dtype=np.int64)
        re[rows, cols] = np.choose(expo, [1, 0, -1, 0])
        im[rows, cols] = np.choose(expo, [0, 1, 0, -1])
        return ExactMatrix(re, im)


def _popcount_parity(x: np.ndarray) -> np.ndarray:
    x = x.copy()
    out = np.zeros_like(x)
    while x.any():
        out ^= x & 1
        x >>= 1
    return out


def _column_phases(p: PauliElement, cols: np.ndarray) -> np.ndarray:
    """Power of ``i`` of the nonzero entry of column ``c``, i.e. of ``E[c xor a, c]``.

    Per qubit: X contributes 1, Z contributes (-1)^c_q, and Y = [[0,i],[-i,0]]
    contributes -i (-1)^c_q.
    """
    ny = (p.a & p.b).bit_count()
    return (p.phase + 3 * ny + 2 * _popcount_parity(cols & p.b)) % 4


def _rotate(re: np.ndarray, im: np.ndarray, expo: np.ndarray):
    """Multiply Gaussian integers by ``i**expo`` (broadcast along the last axis)."""
    out_re = np.where(expo == 0, re, np.where(expo == 1, -im, np.where(expo == 2, -re, im)))
    out_im = np.where(expo == 0, im, np.where(expo == 1, re, np.where(expo == 2, -im, -re)))
    return out_re, out_im


def apply_left(p: PauliElement, mat: ExactMatrix) -> ExactMatrix:
    """``E . M`` without a dense product: row ``c xor a`` of the result is ``phase(c) * M[c]``."""
    dim = mat.dim
    if dim != 1 << p.k:
        raise ValueError("dimension mismatch")
    cols = np.arange(dim, dtype=np.int64)
    expo = _column_phases(p, cols)
    re, im = _rotate(mat.re, mat.im, expo[:, None])
    out_re = np.empty_like(re)
    out_im = np.empty_like(im)
    out_re[cols ^ p.a] = re
    out_im[cols ^ p.a] = im
    return ExactMatrix(out_re, out_im, mat.log2den)


def apply_right(mat: ExactMatrix, p: PauliElement) -> ExactMatrix:
    """``M . E``: column ``c`` of the result is ``phase(c) * M[:, c xor a]``."""
    dim = mat.dim
    if dim != 1 << p.k:
        raise ValueError("dimension mismatch")
    cols = np.arange(dim, dtype=np.int64)
    expo = _column_phases(p, cols)
    re, im = mat.re[:, cols ^ p.a], mat.im[:, cols ^ p.a]
    re, im = _rotate(re, im, expo[None, :])
    return ExactMatrix(re, im, mat.log2den)


def conjugate(p: PauliElement, mat: ExactMatrix) -> ExactMatrix:
    """``E M E^dagger``; the phases of ``E`` cancel."""
    bare = PauliElement(p.k, p.vec)
    return apply_right(apply_left(bare, mat), bare)
