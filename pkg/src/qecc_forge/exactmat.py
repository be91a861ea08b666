"""Dense exact matrices over the Gaussian integers with a power-of-two denominator.

A matrix is stored as two integer arrays (real and imaginary numerators) and a
shared exponent ``p``; its value is ``(re + i*im) / 2**p``.  Every projector
built by this package lives in Z[i][1/2], so no general rationals and no
floating point are ever needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

MAX_DIM = 4096

# int64 arithmetic is used while every intermediate provably fits below this
# bound; otherwise the arrays are promoted to Python ints (dtype=object).
_SAFE = 1 << 62


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class GaussianRational(NamedTuple):
    re: Fraction
    im: Fraction

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return tuple.__hash__(self)


def _maxabs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(max(abs(int(arr.max())), abs(int(arr.min()))))


def _as_object(arr: np.ndarray) -> np.ndarray:
    return arr.astype(object) if arr.dtype != object else arr


def _trailing_zeros(arr: np.ndarray) -> int | None:
    """Common power of two dividing every entry; None if all entries are zero."""
    if arr.dtype == object:
        acc = 0
        for x in arr.flat:
            acc |= abs(int(x))
    else:
        nz = arr[arr != 0]
        if nz.size == 0:
            return None
        acc = int(np.bitwise_or.reduce(np.abs(nz)))
    if acc == 0:
        return None
    return (acc & -acc).bit_length() - 1


class ExactMatrix:
    """Square matrix ``(re + i*im) / 2**log2den`` kept in canonical form.

    Canonical form means ``log2den`` is as small as possible, so two matrices
    are equal exactly when their canonical components are equal.
    """

    __slots__ = ("re", "im", "log2den")

    def __init__(self, re, im=None, log2den: int = 0):
        re = np.asarray(re)
        if re.ndim != 2 or re.shape[0] != re.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {re.shape}")
        if re.shape[0] > MAX_DIM:
            raise DimensionError(f"dimension {re.shape[0]} exceeds the dense cap {MAX_DIM}")
        im = np.zeros_like(re) if im is None else np.asarray(im)
        if im.shape != re.shape:
            raise DimensionError("real and imaginary parts differ in shape")
        if log2den < 0:
            raise ValueError("log2den must be non-negative")
        re, im = self._coerce(re), self._coerce(im)
        if re.dtype != im.dtype:
            re, im = _as_object(re), _as_object(im)
        self.re, self.im, self.log2den = re, im, log2den
        self._canonicalize()

    @staticmethod
    def _coerce(arr: np.ndarray) -> np.ndarray:
        if arr.dtype == object:
            return arr
        if not np.issubdtype(arr.dtype, np.integer) and arr.dtype != bool:
            raise TypeError(f"entries must be integers, got dtype {arr.dtype}")
        return arr.astype(np.int64)

    def _canonicalize(self) -> None:
        if self.log2den == 0:
            return
        tz_re = _trailing_zeros(self.re)
        tz_im = _trailing_zeros(self.im)
        if tz_re is None and tz_im is None:
            self.log2den = 0
            return
        tz = min(t for t in (tz_re, tz_im) if t is not None)
        shift = min(tz, self.log2den)
        if shift:
            self.re = self.re // (1 << shift)
            self.im = self.im // (1 << shift)
            self.log2den -= shift

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, dim: int) -> ExactMatrix:
        return cls(np.eye(dim, dtype=np.int64))

    @classmethod
    def zeros(cls, dim: int) -> ExactMatrix:
        return cls(np.zeros((dim, dim), dtype=np.int64))

    @classmethod
    def from_rows(cls, rows, log2den: int = 0) -> ExactMatrix:
        """Build from nested lists of Python ints or complex numbers with integer parts."""
        arr = np.array(rows, dtype=complex)
        re = np.rint(arr.real).astype(np.int64)
        im = np.rint(arr.imag).astype(np.int64)
        if not (np.array_equal(re, arr.real) and np.array_equal(im, arr.imag)):
            raise ValueError("entries must be Gaussian integers")
        return cls(re, im, log2den)

    # -- basic properties -----------------------------------------------------

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    def __repr__(self) -> str:
        return f"ExactMatrix(dim={self.dim}, log2den={self.log2den})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.log2den == other.log2den
            and np.array_equal(self.re, other.re)
            and np.array_equal(self.im, other.im)
        )

    __hash__ = None

    def entry(self, r: int, c: int) -> GaussianRational:
        den = 1 << self.log2den
        return GaussianRational(Fraction(int(self.re[r, c]), den), Fraction(int(self.im[r, c]), den))

    def to_fractions(self) -> list[list[GaussianRational]]:
        return [[self.entry(r, c) for c in range(self.dim)] for r in range(self.dim)]

    # -- arithmetic -----------------------------------------------------------

    def _check_dim(self, other: ExactMatrix) -> None:
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def _aligned(self, other: ExactMatrix):
        """Numerators of both operands over the larger common denominator."""
        p = max(self.log2den, other.log2den)
        parts = []
        for m in (self, other):
            s = p - m.log2den
            re, im = m.re, m.im
            if s:
                bound = max(_maxabs(re), _maxabs(im)) << s
                if bound >= _SAFE:
                    re, im = _as_object(re), _as_object(im)
                re, im = re * (1 << s), im * (1 << s)
            parts.append((re, im))
        (ar, ai), (br, bi) = parts
        if max(_maxabs(ar), _maxabs(ai)) + max(_maxabs(br), _maxabs(bi)) >= _SAFE:
            ar, ai, br, bi = map(_as_object, (ar, ai, br, bi))
        elif ar.dtype != br.dtype:
            ar, ai, br, bi = map(_as_object, (ar, ai, br, bi))
        return ar, ai, br, bi, p

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_dim(other)
        ar, ai, br, bi, p = self._aligned(other)
        return ExactMatrix(ar + br, ai + bi, p)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_dim(other)
        ar, ai, br, bi, p = self._aligned(other)
        return ExactMatrix(ar - br, ai - bi, p)

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(-self.re, -self.im, self.log2den)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_dim(other)
        ar, ai, br, bi = self.re, self.im, other.re, other.im
        a = max(_maxabs(ar), _maxabs(ai))
        b = max(_maxabs(br), _maxabs(bi))
        if 2 * a * b * self.dim >= _SAFE or ar.dtype == object or br.dtype == object:
            ar, ai, br, bi = map(_as_object, (ar, ai, br, bi))
            re = ar.dot(br) - ai.dot(bi)
            im = ar.dot(bi) + ai.dot(br)
        else:
            re = ar @ br - ai @ bi
            im = ar @ bi + ai @ br
        return ExactMatrix(re, im, self.log2den + other.log2den)

    def scale(self, factor: complex | int = 1, log2den: int = 0) -> ExactMatrix:
        """Multiply by the Gaussian integer ``factor`` and divide by ``2**log2den``."""
        fr, fi = int(complex(factor).real), int(complex(factor).imag)
        if complex(fr, fi) != complex(factor):
            raise ValueError("factor must be a Gaussian integer")
        if log2den < 0:
            raise ValueError("log2den must be non-negative")
        re, im = self.re, self.im
        if max(_maxabs(re), _maxabs(im)) * (abs(fr) + abs(fi)) >= _SAFE:
            re, im = _as_object(re), _as_object(im)
        return ExactMatrix(re * fr - im * fi, re * fi + im * fr, self.log2den + log2den)

    def adjoint(self) -> ExactMatrix:
        return ExactMatrix(self.re.T.copy(), -self.im.T, self.log2den)

    def trace(self) -> GaussianRational:
        den = 1 << self.log2den
        return GaussianRational(
            Fraction(int(np.trace(self.re)), den), Fraction(int(np.trace(self.im)), den)
        )

    def is_zero(self) -> bool:
        return not self.re.any() and not self.im.any()

    def is_hermitian(self) -> bool:
        return self == self.adjoint()

    def is_idempotent(self) -> bool:
        return self @ self == self

    def commutes_with(self, other: ExactMatrix) -> bool:
        return self @ other == other @ self

    # -- export ---------------------------------------------------------------

    def to_json(self) -> dict:
        entries = [
            [[int(self.re[r, c]), int(self.im[r, c])] for c in range(self.dim)]
            for r in range(self.dim)
        ]
        return {"dim": self.dim, "log2den": self.log2den, "entries": entries}

    @classmethod
    def from_json(cls, data: dict) -> ExactMatrix:
        try:
            dim = int(data["dim"])
            entries = data["entries"]
            p = int(data.get("log2den", 0))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from None
        if len(entries) != dim or any(len(row) != dim for row in entries):
            raise ValueError("matrix JSON entries do not match dim")
        re = np.array([[int(e[0]) for e in row] for row in entries], dtype=object)
        im = np.array([[int(e[1]) for e in row] for row in entries], dtype=object)
        if max(_maxabs(re), _maxabs(im)) < _SAFE:
            re, im = re.astype(np.int64), im.astype(np.int64)
        return cls(re.reshape(dim, dim), im.reshape(dim, dim), p)

    def to_text(self) -> str:
        """Integer grid scaled by a ``1/2^p`` header, e.g. ``1/4 *`` then rows like ``2 i -1 0``."""
        cells = [[_gauss_str(int(self.re[r, c]), int(self.im[r, c])) for c in range(self.dim)]
                 for r in range(self.dim)]
        width = max((len(s) for row in cells for s in row), default=1)
        header = f"1/{1 << self.log2den} *" if self.log2den else "1 *"
        lines = [header]
        lines += [" ".join(s.rjust(width) for s in row) for row in cells]
        return "\n".join(lines)


def _gauss_str(re: int, im: int) -> str:
    if im == 0:
        return str(re)
    imag = {1: "i", -1: "-i"}.get(im, f"{im}i")
    if re == 0:
        return imag
    return f"{re}{'+' if im > 0 else ''}{imag}"
