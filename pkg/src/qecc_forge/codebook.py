"""Explicit code families and the two code transformations.

Column lists are written as decimal integers with row 1 as the most
significant bit, exactly as the matrices are printed column by column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolfn import BooleanFunction
from .qecc import CodeCandidate, CodeError, verify
from .symplectic import SymplecticMatrix

FAMILIES = ("additive_2m", "nonadditive_2m", "rains_5_6_2", "rains_ext_2m1", "laflamme_5_2_3")

RAINS_ANF = "v1v2v3 ^ v3v4v5 ^ v2v3v4 ^ v1v2v5 ^ v1v4v5 ^ v2v3v4v5"
RAINS_COLUMNS = (6, 12, 24, 17, 3, 14, 31, 28, 26, 22)
RAINS_CSET = frozenset({1, 3, 4, 6, 8, 11, 12, 14, 17, 19, 21, 22, 24, 26, 28, 31})

LAFLAMME_ROWS = (
    "01100|10010",
    "00110|01001",
    "00011|10100",
    "10001|01010",
    "00100|10001",
)
LAFLAMME_STABILIZERS = ("ZXXZI", "IZXXZ", "ZIZXX", "XZIZX")


@dataclass(frozen=True)
class FamilySpec:
    name: str
    m: int | None = None

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise CodeError(f"unknown family {self.name!r}; choose from {', '.join(FAMILIES)}")
        minimum = {"additive_2m": 2, "nonadditive_2m": 3, "rains_ext_2m1": 3}.get(self.name)
        if minimum is None:
            return
        if self.m is None or self.m < minimum:
            raise CodeError(f"family {self.name} needs m >= {minimum}, got {self.m}")


def _x_tail(m: int) -> list[int]:
    """Right half ``x_{k+1}..x_{2k}`` shared by both length-2m families."""
    k = 2 * m
    top = 1 << (k - 1)
    cols = [top | ((1 << (k - 2)) - 1)]  # (1 0 1 ... 1)
    cols += [top | (1 << (k - 3 - j)) for j in range(k - 2)]  # (1 0 .. 1 .. 0)
    cols.append(top)  # (1 0 ... 0)
    return cols


def additive_2m(m: int) -> CodeCandidate:
    """``((2m, 4^(m-1), 2))`` from ``f = v_{2m} v_{2m-1}``."""
    k = 2 * m
    f = BooleanFunction.monomial(k, [k, k - 1])
    cols = [1 << (k - 2)] * k + _x_tail(m)
    return CodeCandidate(k, 2, f, SymplecticMatrix.from_columns(cols), f"additive_2m(m={m})")


def nonadditive_2m_function(m: int) -> BooleanFunction:
    """The weight-``4^(m-1)`` function of the non-additive length-2m family.

    ``v_{2m} v_{2m-1} v_{2m-2}
      + v_{2m} v_{2m-1} ~v_{2m-2} (v_{2m-3} + ~v_{2m-3} v_{2m-4} + ... + ~v_{2m-3}..~v_2 v_1)
      + v_{2m} ~v_{2m-1} v_{2m-2} ... v_1``, the three parts having disjoint supports.
    """
    k = 2 * m
    terms = [f"v{k} v{k - 1} v{k - 2}"]
    for top in range(k - 3, 0, -1):
        negs = " ".join(f"~v{j}" for j in range(k - 3, top, -1))
        terms.append(f"v{k} v{k - 1} ~v{k - 2} {negs} v{top}")
    terms.append(f"v{k} ~v{k - 1} " + " ".join(f"v{j}" for j in range(k - 2, 0, -1)))
    # disjoint supports, so XOR coincides with OR
    return BooleanFunction.from_anf(k, " ^ ".join(terms))


def nonadditive_2m(m: int) -> CodeCandidate:
    k = 2 * m
    f = nonadditive_2m_function(m)
    cols = [(1 << (k - 1)) - 1] * k + _x_tail(m)
    return CodeCandidate(k, 2, f, SymplecticMatrix.from_columns(cols), f"nonadditive_2m(m={m})")


def rains_function(k: int = 5) -> BooleanFunction:
    return BooleanFunction.from_anf(5, RAINS_ANF).extend(k)


def rains_5_6_2() -> CodeCandidate:
    A = SymplecticMatrix.from_columns(RAINS_COLUMNS)
    return CodeCandidate(5, 2, rains_function(), A, "rains_5_6_2")


def rains_ext_columns(m: int) -> list[int]:
    k = 2 * m + 1
    left = [6, 12, 24, 17] + [3] * (k - 4)
    right = [14, 31, 28, 26, (1 << (2 * m + 1)) - 10] + [(1 << e) + 22 for e in range(5, 2 * m + 1)]
    return left + right


def rains_ext_2m1(m: int) -> CodeCandidate:
    """``((2m+1, 3 * 2^(2m-3), 2))``: the 5-variable function in ``2m+1`` variables."""
    k = 2 * m + 1
    A = SymplecticMatrix.from_columns(rains_ext_columns(m))
    return CodeCandidate(k, 2, rains_function(k), A, f"rains_ext_2m1(m={m})")


def laflamme_5_2_3() -> CodeCandidate:
    f = BooleanFunction.monomial(5, [5, 4, 3, 2])
    return CodeCandidate(5, 3, f, SymplecticMatrix.from_strings(LAFLAMME_ROWS), "laflamme_5_2_3")


def make(spec: FamilySpec | str, m: int | None = None) -> CodeCandidate:
    if isinstance(spec, str):
        spec = FamilySpec(spec, m)
    if spec.name == "additive_2m":
        return additive_2m(spec.m)
    if spec.name == "nonadditive_2m":
        return nonadditive_2m(spec.m)
    if spec.name == "rains_5_6_2":
        return rains_5_6_2()
    if spec.name == "rains_ext_2m1":
        return rains_ext_2m1(spec.m)
    return laflamme_5_2_3()


def _require_d2(c: CodeCandidate) -> None:
    if c.d != 2:
        raise CodeError(f"transformation needs a distance-2 candidate, got d={c.d}")
    result = verify(c)
    if not result.ok:
        raise CodeError(f"input candidate does not verify: {result.reason}")


def extend_k2(c: CodeCandidate) -> CodeCandidate:
    """``((k, M, 2)) -> ((k+2, 4M, 2))``.

    New function ignores the two added (most significant) variables.  New
    columns: ``(0,0,x_1) .. (0,0,x_{k-1})``, ``(0,0,x_k)`` three times,
    ``(0,0,x_{k+1}) .. (0,0,x_{2k-1})``, then ``(1,1,x_{2k})``,
    ``(0,1,x_{2k})``, ``(1,0,x_{2k})``.
    """
    _require_d2(c)
    k = c.k
    x = c.A.columns
    hi, lo = 1 << (k + 1), 1 << k
    cols = list(x[: k - 1]) + [x[k - 1]] * 3 + list(x[k : 2 * k - 1])
    cols += [hi | lo | x[2 * k - 1], lo | x[2 * k - 1], hi | x[2 * k - 1]]
    name = f"extend_k2({c.name})" if c.name else None
    return CodeCandidate(k + 2, 2, c.f.extend(k + 2), SymplecticMatrix.from_columns(cols), name)


def shrink_M(c: CodeCandidate, drop: int) -> CodeCandidate:
    """``((k, M, 2)) -> ((k, M-1, 2))`` by removing one support point; same matrix."""
    if drop not in c.f.support:
        raise CodeError(f"{drop} is not in the support of f")
    if c.M < 2:
        raise CodeError("cannot shrink below weight 1")
    _require_d2(c)
    f = BooleanFunction(c.k, c.f.bits & ~(1 << drop))
    name = f"shrink_M({c.name}, {drop})" if c.name else None
    return CodeCandidate(c.k, 2, f, c.A, name)
