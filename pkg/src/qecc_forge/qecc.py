"""Code candidates built from a Boolean function and a k x 2k binary matrix.

A candidate ``(f, A, d)`` is accepted when

* the rows of ``A`` are independent and pairwise symplectic-orthogonal, and
* every image ``A . w`` of a nonzero error ``w`` of symplectic weight at most
  ``d - 1`` lies in the complementary set of ``f``.

It then defines the projector ``P_f`` (rows of ``A`` drive ``P_k, ..., P_1``)
of an ``((k, wt(f), d))`` non-degenerate code.  :func:`verify` is the
symbolic check; :func:`distance_oracle` checks ``P E P = 0`` on dense exact
matrices and shares no code path with it.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .boolfn import BooleanFunction
from .exactmat import ExactMatrix
from .pauli import PauliElement, apply_left, conjugate
from .projlogic import ProjectorFamily, evaluate
from .symplectic import (
    SymplecticMatrix,
    enumerate_errors,
    gf2_rank,
    swap_halves,
    symplectic_product,
    vec_to_str,
)


class CodeError(ValueError):
    """A candidate is malformed or fails a precondition."""


def max_distance(k: int) -> int:
    """Largest ``d`` the construction can reach for length ``k``: ``ceil((k+3)/2)``."""
    return (k + 4) // 2


@dataclass(frozen=True)
class CodeCandidate:
    k: int
    d: int
    f: BooleanFunction
    A: SymplecticMatrix
    name: str | None = None

    def __post_init__(self):
        if self.f.m != self.k:
            raise CodeError(f"function has {self.f.m} variables, expected {self.k}")
        if self.A.k != self.k:
            raise CodeError(f"matrix is for k={self.A.k}, expected {self.k}")
        if self.d < 2:
            raise CodeError("target distance must be at least 2")

    @property
    def M(self) -> int:
        return self.f.weight

    def family(self) -> ProjectorFamily:
        return ProjectorFamily.from_code_matrix(self.A)

    def with_distance(self, d: int) -> CodeCandidate:
        return CodeCandidate(self.k, d, self.f, self.A, self.name)

    # -- bundle format ----------------------------------------------------------

    def to_bundle(self) -> dict:
        out = {
            "k": self.k,
            "d": self.d,
            "f_support": list(self.f.support),
            "A_f": self.A.row_strings(),
        }
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_bundle(cls, data: dict) -> CodeCandidate:
        try:
            k = int(data["k"])
            d = int(data.get("d", 2))
            A = SymplecticMatrix.from_strings(data["A_f"])
            if "f_support" in data:
                f = BooleanFunction.from_support(k, data["f_support"])
            elif "f_anf" in data:
                f = BooleanFunction.from_anf(k, data["f_anf"])
            elif "f_hex" in data:
                f = BooleanFunction.from_hex(k, data["f_hex"])
            else:
                raise KeyError("f_support")
        except KeyError as exc:
            raise CodeError(f"code bundle is missing field {exc}") from None
        except (TypeError, ValueError) as exc:
            raise CodeError(f"malformed code bundle: {exc}") from None
        return cls(k, d, f, A, data.get("name"))


@dataclass(frozen=True)
class TranscriptRecord:
    error: int
    shift: int
    ok: bool

    def line(self, k: int) -> str:
        return f"{vec_to_str(self.error, k)} {self.shift} {'ok' if self.ok else 'FAIL'}"


def _digest(records: Iterable[TranscriptRecord], k: int) -> str:
    h = hashlib.sha256()
    for r in records:
        h.update(r.line(k).encode())
        h.update(b"\n")
    return h.hexdigest()


@dataclass
class FailureReport:
    candidate: CodeCandidate
    reason: str
    failures: list[TranscriptRecord] = field(default_factory=list)
    checked: int = 0
    ok: bool = False

    def to_json(self) -> dict:
        k = self.candidate.k
        return {
            "verified": False,
            "bundle": self.candidate.to_bundle(),
            "reason": self.reason,
            "checked": self.checked,
            "failures": [
                {"error": vec_to_str(r.error, k), "shift": r.shift} for r in self.failures
            ],
        }


@dataclass
class CodeCertificate:
    candidate: CodeCandidate
    transcript: list[TranscriptRecord]
    additive: bool
    stabilizers: list[str] | None = None
    ok: bool = True

    @property
    def M(self) -> int:
        return self.candidate.M

    @property
    def digest(self) -> str:
        return _digest(self.transcript, self.candidate.k)

    def to_json(self, full_transcript: bool = False) -> dict:
        c = self.candidate
        out = {
            "verified": True,
            "bundle": c.to_bundle(),
            "params": [c.k, c.M, c.d],
            "additive": self.additive,
            "stabilizers": self.stabilizers,
            "transcript_count": len(self.transcript),
            "transcript_digest": self.digest,
        }
        if full_transcript:
            out["transcript"] = [r.line(c.k) for r in self.transcript]
        return out


def structural_problem(A: SymplecticMatrix) -> str | None:
    """Why ``A`` cannot serve as a code matrix, or None."""
    rank = gf2_rank(A.rows)
    if rank != A.k:
        return f"rows are linearly dependent (rank {rank} < {A.k})"
    for i in range(A.k):
        for j in range(i + 1, A.k):
            if symplectic_product(A.rows[i], A.rows[j], A.k):
                return f"rows {i + 1} and {j + 1} have symplectic product 1"
    return None


def verify(c: CodeCandidate, all_failures: bool = False) -> CodeCertificate | FailureReport:
    """Check both construction conditions and return a certificate or a report.

    Only the first failing error is recorded unless ``all_failures`` is set.
    """
    if c.d > max_distance(c.k):
        return FailureReport(c, f"distance {c.d} exceeds the ceiling {max_distance(c.k)} for k={c.k}")
    problem = structural_problem(c.A)
    if problem:
        return FailureReport(c, problem)

    mask = c.f.cset_mask()
    transcript: list[TranscriptRecord] = []
    failures: list[TranscriptRecord] = []
    for w in enumerate_errors(c.k, c.d - 1):
        s = c.A.mat_vec(w)
        rec = TranscriptRecord(w, s, bool(s != 0 and mask[s]))
        transcript.append(rec)
        if not rec.ok:
            failures.append(rec)
            if not all_failures:
                break
    if failures:
        reason = "zero image" if failures[0].shift == 0 else "image outside the complementary set"
        return FailureReport(c, reason, failures, len(transcript))

    stabs = stabilizer_paulis(c)
    return CodeCertificate(
        c, transcript, stabs is not None, [str(p) for p in stabs] if stabs is not None else None
    )


def build_projector(c: CodeCandidate, check: bool = True) -> ExactMatrix:
    """``P_f`` over the family defined by ``A``; verifies the candidate first unless told not to."""
    if check:
        result = verify(c)
        if not result.ok:
            raise CodeError(f"candidate failed verification: {result.reason}")
    return evaluate(c.f, c.family())


@dataclass
class OracleResult:
    passed: bool
    checked: int
    violation: int | None = None
    k: int = 0

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "violation": None if self.violation is None else vec_to_str(self.violation, self.k),
        }


def _pep_zero(P: ExactMatrix, k: int, w: int) -> bool:
    return (P @ apply_left(PauliElement(k, w), P)).is_zero()


def distance_oracle(P: ExactMatrix, k: int, dmax: int, jobs: int = 1) -> OracleResult:
    """Dense check that ``P E P = 0`` for every error of symplectic weight ``<= dmax``."""
    if P.dim != 1 << k:
        raise CodeError(f"projector dimension {P.dim} does not match k={k}")
    errors = list(enumerate_errors(k, dmax))
    if jobs > 1 and len(errors) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(lambda w: _pep_zero(P, k, w), errors))
        for i, ok in enumerate(flags):
            if not ok:
                return OracleResult(False, i + 1, errors[i], k)
        return OracleResult(True, len(errors), None, k)
    for i, w in enumerate(errors):
        if not _pep_zero(P, k, w):
            return OracleResult(False, i + 1, w, k)
    return OracleResult(True, len(errors), None, k)


def error_shift(A: SymplecticMatrix, w: int) -> int:
    """Translation of the Boolean function induced by conjugating with ``E_w``.

    Bit ``j`` flips exactly when ``E_w`` anticommutes with the generator of
    ``P_j``, i.e. the shift is ``A`` applied to ``w`` with its halves swapped.
    """
    return A.mat_vec(swap_halves(w, A.k))


def conjugate_correspondence_check(
    c: CodeCandidate, w: int, P: ExactMatrix | None = None
) -> bool:
    """``E_w P_f E_w^dagger`` equals the projector of ``f(v xor shift)``, exactly."""
    fam = c.family()
    if P is None:
        P = evaluate(c.f, fam)
    lhs = conjugate(PauliElement(c.k, w), P)
    rhs = evaluate(c.f.shift(error_shift(c.A, w)), fam)
    return lhs == rhs


def stabilizer_paulis(c: CodeCandidate) -> list[PauliElement] | None:
    """Generators ``E_row`` for the variables of a monomial ``f``; None if ``f`` is not one.

    Variable ``v_j`` is driven by row ``k + 1 - j`` of ``A``.
    """
    mono, variables = c.f.is_monomial()
    if not mono:
        return None
    rows = sorted(c.k + 1 - j for j in variables)
    return [PauliElement(c.k, c.A.row(r)) for r in rows]


def extract_stabilizers(c: CodeCandidate, P: ExactMatrix | None = None) -> list[str] | None:
    """Stabilizer strings of a monomial construction, each checked to fix ``P_f``.

    Returns None when ``f`` is not a monomial (the construction is then not
    in stabilizer form).
    """
    stabs = stabilizer_paulis(c)
    if stabs is None:
        return None
    if P is None:
        P = evaluate(c.f, c.family())
    for s in stabs:
        if apply_left(s, P) != P:
            raise CodeError(f"stabilizer {s} does not fix the code projector")
    return [str(s) for s in stabs]
