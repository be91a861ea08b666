"""Boolean functions as packed truth vectors.

Decimal-index convention: the point ``(v_m, ..., v_1)`` has index
``v = sum(v_i * 2**(i-1))``, so ``v_1`` is bit 0 and ``v_m`` is the most
significant bit.  A function is stored as a Python int whose bit ``v`` is
``f(v)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

MAX_VARS = 24

# Past this many support pairs the difference set is found by XOR convolution.
_PAIRWISE_LIMIT = 1 << 24


class ANFParseError(ValueError):
    """Raised for malformed Boolean expressions; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _check_m(m: int) -> None:
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError(f"variable count must be a positive integer, got {m!r}")
    if m > MAX_VARS:
        raise ValueError(f"variable count {m} exceeds the supported maximum {MAX_VARS}")


def walsh_hadamard(vec: np.ndarray) -> np.ndarray:
    """Unnormalised in-place-style fast Walsh-Hadamard transform over int64.

    Arithmetic wraps modulo 2**64; callers only rely on results whose true
    value fits in int64, which the wrap-around then reproduces exactly.
    """
    out = np.array(vec, dtype=np.int64)
    n = out.size
    h = 1
    with np.errstate(over="ignore"):
        while h < n:
            view = out.reshape(-1, 2, h)
            a = view[:, 0, :].copy()
            b = view[:, 1, :]
            view[:, 0, :] = a + b
            view[:, 1, :] = a - b
            h *= 2
    return out


def mobius(vec: np.ndarray) -> np.ndarray:
    """Binary Mobius transform (truth vector <-> ANF coefficients); an involution."""
    out = np.array(vec, dtype=np.uint8) & 1
    n = out.size
    h = 1
    while h < n:
        view = out.reshape(-1, 2, h)
        view[:, 1, :] ^= view[:, 0, :]
        h *= 2
    return out


@dataclass(frozen=True)
class BooleanFunction:
    """An ``m``-variable Boolean function; ``bits`` has bit ``v`` set iff ``f(v) = 1``."""

    m: int
    bits: int = field(default=0)

    def __post_init__(self):
        _check_m(self.m)
        if self.bits < 0 or self.bits >> (1 << self.m):
            raise ValueError(f"truth vector has entries beyond index 2^{self.m} - 1")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_support(cls, m: int, support) -> BooleanFunction:
        _check_m(m)
        bits = 0
        size = 1 << m
        for v in support:
            v = int(v)
            if not 0 <= v < size:
                raise ValueError(f"support index {v} out of range for m={m}")
            bits |= 1 << v
        return cls(m, bits)

    @classmethod
    def from_truth(cls, truth) -> BooleanFunction:
        arr = np.asarray(truth, dtype=np.uint8)
        n = arr.size
        m = n.bit_length() - 1
        if n < 2 or 1 << m != n:
            raise ValueError(f"truth vector length {n} is not a power of two >= 2")
        packed = np.packbits(arr & 1, bitorder="little").tobytes()
        return cls(m, int.from_bytes(packed, "little"))

    @classmethod
    def from_hex(cls, m: int, text: str) -> BooleanFunction:
        """Parse the hex truth-vector format (leftmost hex digit holds ``y_{2^m-1}``)."""
        _check_m(m)
        text = text.strip().lower().removeprefix("0x")
        try:
            bits = int(text, 16) if text else 0
        except ValueError:
            raise ValueError(f"invalid hex truth vector {text!r}") from None
        return cls(m, bits)

    @classmethod
    def from_anf(cls, m: int, expression: str) -> BooleanFunction:
        _check_m(m)
        truth = _Parser(expression, m).parse()
        return cls.from_truth(truth)

    @classmethod
    def constant(cls, m: int, value: int) -> BooleanFunction:
        _check_m(m)
        return cls(m, (1 << (1 << m)) - 1 if value else 0)

    # -- views ----------------------------------------------------------------

    @property
    def size(self) -> int:
        return 1 << self.m

    @cached_property
    def truth(self) -> np.ndarray:
        nbytes = max(1, self.size // 8)
        raw = np.frombuffer(self.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.size]

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.flatnonzero(self.truth))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __call__(self, v: int) -> int:
        return (self.bits >> v) & 1

    def to_hex(self) -> str:
        digits = max(1, self.size // 4)
        return format(self.bits, f"0{digits}x")

    def __repr__(self) -> str:
        if self.weight <= 16:
            return f"BooleanFunction(m={self.m}, support={list(self.support)})"
        return f"BooleanFunction(m={self.m}, weight={self.weight})"

    # -- combinatorics --------------------------------------------------------

    @cached_property
    def _signs(self) -> np.ndarray:
        return 1 - 2 * self.truth.astype(np.int64)

    def autocorrelation(self) -> np.ndarray:
        """``r(a) = sum_v (-1)^(f(v) xor f(v xor a))`` for every shift ``a``.

        Computed as the inverse transform of the squared Walsh spectrum.  The
        true values of ``2^m * r(a)`` are bounded by ``2^(2m)``, well inside
        int64, so modular wrap in the intermediate sums is harmless.
        """
        w = walsh_hadamard(self._signs)
        with np.errstate(over="ignore"):
            return walsh_hadamard(w * w) >> self.m

    def intersections(self) -> np.ndarray:
        """``N(a) = |support & (support xor a)|`` for every ``a``."""
        supp = np.asarray(self.support, dtype=np.int64)
        if supp.size * supp.size <= _PAIRWISE_LIMIT:
            diffs = (supp[:, None] ^ supp[None, :]).ravel()
            return np.bincount(diffs, minlength=self.size).astype(np.int64)
        w = walsh_hadamard(self.truth.astype(np.int64))
        with np.errstate(over="ignore"):
            return walsh_hadamard(w * w) >> self.m

    def cset(self) -> frozenset[int]:
        """Shifts ``a`` for which ``f`` and ``f(. xor a)`` have disjoint supports."""
        return frozenset(int(a) for a in np.flatnonzero(self.intersections() == 0))

    def cset_mask(self) -> np.ndarray:
        """Boolean membership array of the complementary set, indexed by shift."""
        return self.intersections() == 0

    def shift(self, a: int) -> BooleanFunction:
        if not 0 <= a < self.size:
            raise ValueError(f"shift {a} out of range for m={self.m}")
        if a == 0:
            return self
        idx = np.arange(self.size, dtype=np.int64) ^ a
        return BooleanFunction.from_truth(self.truth[idx])

    def extend(self, m: int) -> BooleanFunction:
        """Same function viewed in ``m >= self.m`` variables (new ones ignored)."""
        if m < self.m:
            raise ValueError("cannot drop variables")
        support = [s | (t << self.m) for t in range(1 << (m - self.m)) for s in self.support]
        return BooleanFunction.from_support(m, support)

    # -- algebraic normal form ------------------------------------------------

    def anf(self) -> list[int]:
        """ANF monomials as variable masks (bit ``i-1`` set means ``v_i`` occurs)."""
        return [int(u) for u in np.flatnonzero(mobius(self.truth))]

    def is_monomial(self) -> tuple[bool, list[int]]:
        """Whether the ANF is a single uncomplemented product, and its variables (1-based)."""
        terms = self.anf()
        if len(terms) != 1:
            return False, []
        mask = terms[0]
        return True, [i + 1 for i in range(self.m) if mask >> i & 1]

    def anf_string(self) -> str:
        terms = self.anf()
        if not terms:
            return "0"
        out = []
        for mask in terms:
            names = [f"v{i + 1}" for i in range(self.m) if mask >> i & 1]
            out.append("*".join(names) if names else "1")
        return " ^ ".join(out)

    @classmethod
    def from_anf_terms(cls, m: int, terms) -> BooleanFunction:
        _check_m(m)
        coeffs = np.zeros(1 << m, dtype=np.uint8)
        for t in terms:
            if not 0 <= t < 1 << m:
                raise ValueError(f"monomial mask {t} out of range for m={m}")
            coeffs[t] ^= 1
        return cls.from_truth(mobius(coeffs))

    @classmethod
    def monomial(cls, m: int, variables) -> BooleanFunction:
        mask = 0
        for i in variables:
            if not 1 <= i <= m:
                raise ValueError(f"unknown variable v{i} for m={m}")
            mask |= 1 << (i - 1)
        support = [v for v in range(1 << m) if v & mask == mask]
        return cls.from_support(m, support)


def autocorrelation(f: BooleanFunction) -> np.ndarray:
    return f.autocorrelation()


def cset(f: BooleanFunction) -> frozenset[int]:
    return f.cset()


# -- expression parser --------------------------------------------------------

_VAR = re.compile(r"v\s*(\d+)")


class _Parser:
    """Recursive descent over: expr := term (xor term)*, term := factor+,
    factor := '~' factor | '(' expr ')' | vN | 0 | 1."""

    def __init__(self, text: str, m: int):
        self.text = text
        self.m = m
        self.pos = 0
        self.idx = np.arange(1 << m, dtype=np.int64)
        self.ones = np.ones(1 << m, dtype=np.uint8)

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> np.ndarray:
        if not self.text.strip():
            raise ANFParseError("empty expression", 0)
        out = self._expr()
        if self._peek():
            raise ANFParseError(f"unexpected {self._peek()!r}", self.pos)
        return out

    def _expr(self) -> np.ndarray:
        acc = self._term()
        while self._peek() in ("^", "⊕", "+"):
            self.pos += 1
            acc = acc ^ self._term()
        return acc

    def _term(self) -> np.ndarray:
        acc = self._factor()
        while True:
            ch = self._peek()
            if ch in ("*", "·", "&"):
                self.pos += 1
                acc = acc & self._factor()
            elif ch and (ch in "v~¬!(01"):
                acc = acc & self._factor()
            else:
                return acc

    def _factor(self) -> np.ndarray:
        ch = self._peek()
        start = self.pos
        if not ch:
            raise ANFParseError("unexpected end of expression", start)
        if ch in "~¬!":
            self.pos += 1
            return self._factor() ^ 1
        if ch == "(":
            self.pos += 1
            inner = self._expr()
            if self._peek() != ")":
                raise ANFParseError("expected ')'", self.pos)
            self.pos += 1
            return inner
        if ch in "01":
            self.pos += 1
            return self.ones.copy() if ch == "1" else np.zeros_like(self.ones)
        if ch == "v":
            mt = _VAR.match(self.text, self.pos)
            if not mt:
                raise ANFParseError("expected variable index after 'v'", start)
            i = int(mt.group(1))
            if not 1 <= i <= self.m:
                raise ANFParseError(f"unknown variable v{i} (m={self.m})", start)
            self.pos = mt.end()
            return ((self.idx >> (i - 1)) & 1).astype(np.uint8)
        raise ANFParseError(f"unexpected {ch!r}", start)
