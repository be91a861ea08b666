"""Projection logic on commuting projectors and the Boolean-function evaluator.

``evaluate(f, family)`` substitutes the commuting projectors ``P_1..P_m`` of a
:class:`ProjectorFamily` for the variables of ``f`` and returns the exact
matrix ``P_f``.  The result is the sum of the rank-one minterm projectors
``prod_j P_j^(v_j)`` over the support of ``f`` (``P^1 = P``, ``P^0 = I - P``),
which are mutually orthogonal, so the sum is also their join.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .boolfn import BooleanFunction
from .exactmat import ExactMatrix
from .pauli import PauliElement, apply_left
from .symplectic import SymplecticMatrix, is_lagrangian


class ProjectorError(ValueError):
    """Inputs to a projection-logic operation are not commuting projectors."""


def _require_projector(p: ExactMatrix, name: str) -> None:
    if not p.is_idempotent():
        raise ProjectorError(f"{name} is not idempotent")


def _require_commuting(p: ExactMatrix, q: ExactMatrix) -> None:
    _require_projector(p, "P")
    _require_projector(q, "Q")
    if not p.commutes_with(q):
        raise ProjectorError("P and Q do not commute")


def meet(p: ExactMatrix, q: ExactMatrix) -> ExactMatrix:
    _require_commuting(p, q)
    return p @ q


def join(p: ExactMatrix, q: ExactMatrix) -> ExactMatrix:
    _require_commuting(p, q)
    return p + q - p @ q


def xor(p: ExactMatrix, q: ExactMatrix) -> ExactMatrix:
    _require_commuting(p, q)
    return p + q - (p @ q).scale(2)


def tilde(p: ExactMatrix) -> ExactMatrix:
    _require_projector(p, "P")
    return ExactMatrix.identity(p.dim) - p


@dataclass(frozen=True)
class ProjectorFamily:
    """Commuting projectors ``P_j = (I + E_{y_j}) / 2``; ``rows[j-1]`` is ``y_j``."""

    k: int
    rows: tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(self.rows) != self.k:
            raise ProjectorError(f"need {self.k} generator rows, got {len(self.rows)}")
        if not is_lagrangian(self.rows, self.k):
            raise ProjectorError("generator rows must be independent and pairwise symplectic-orthogonal")

    @classmethod
    def from_code_matrix(cls, a: SymplecticMatrix) -> ProjectorFamily:
        """Row ``j`` of ``A_f`` drives ``P_{k+1-j}``: the first row is ``P_k``, the last ``P_1``."""
        return cls(a.k, tuple(reversed(a.rows)))

    @property
    def dim(self) -> int:
        return 1 << self.k

    def pauli(self, j: int) -> PauliElement:
        return PauliElement(self.k, self.rows[j - 1])

    def projector(self, j: int) -> ExactMatrix:
        """Dense ``P_j`` (1-based)."""
        if j not in self._cache:
            ident = ExactMatrix.identity(self.dim)
            self._cache[j] = (ident + self.pauli(j).to_matrix()).scale(1, 1)
        return self._cache[j]


def _half_step(mat: ExactMatrix, gen: PauliElement, bit: int) -> ExactMatrix:
    """``P . M`` for ``P = (I + E)/2`` if bit else ``(I - E)/2``, using the monomial ``E``."""
    em = apply_left(gen, mat)
    out = mat + em if bit else mat - em
    return out.scale(1, 1)


def evaluate(f: BooleanFunction, family: ProjectorFamily) -> ExactMatrix:
    """``P_f`` as the orthogonal sum of minterm projectors over ``support(f)``.

    Minterms are built along a binary trie from ``v_m`` down to ``v_1`` so
    that support points sharing high-order bits share partial products.
    """
    if f.m != family.k:
        raise ProjectorError(f"function has {f.m} variables but the family has {family.k} projectors")
    k = family.k
    gens = [family.pauli(j) for j in range(1, k + 1)]
    total = ExactMatrix.zeros(family.dim)
    support = f.support
    if not support:
        return total
    if len(support) == family.dim:
        return ExactMatrix.identity(family.dim)

    # depth-first, low branch first, so leaves arrive in ascending v
    stack = [(k, ExactMatrix.identity(family.dim), list(support))]
    leaves: list[ExactMatrix] = []
    while stack:
        level, mat, pts = stack.pop()
        if level == 0:
            leaves.append(mat)
            continue
        bit = level - 1
        hi = [v for v in pts if v >> bit & 1]
        lo = [v for v in pts if not v >> bit & 1]
        if hi:
            stack.append((level - 1, _half_step(mat, gens[level - 1], 1), hi))
        if lo:
            stack.append((level - 1, _half_step(mat, gens[level - 1], 0), lo))
    for leaf in leaves:
        total = total + leaf
    return total


def minterm(v: int, family: ProjectorFamily) -> ExactMatrix:
    """Rank-one projector ``prod_j P_j^(bit j-1 of v)``."""
    mat = ExactMatrix.identity(family.dim)
    for j in range(1, family.k + 1):
        mat = _half_step(mat, family.pauli(j), v >> (j - 1) & 1)
    return mat


def evaluate_by_anf(f: BooleanFunction, family: ProjectorFamily) -> ExactMatrix:
    """Independent route to ``P_f``: XOR of meets over the ANF, with dense products.

    Uses only the operator identities ``P and Q = PQ`` and
    ``P xor Q = P + Q - 2PQ``; kept as a cross-check for :func:`evaluate`.
    """
    if f.m != family.k:
        raise ProjectorError("arity mismatch")
    ident = ExactMatrix.identity(family.dim)
    acc = ExactMatrix.zeros(family.dim)
    for mask in f.anf():
        term = ident
        for j in range(1, family.k + 1):
            if mask >> (j - 1) & 1:
                term = term @ family.projector(j)
        acc = acc + term - (acc @ term).scale(2)
    return acc


def family_from_rows(rows: Sequence[int], k: int) -> ProjectorFamily:
    return ProjectorFamily(k, tuple(rows))
