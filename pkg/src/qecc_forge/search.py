"""Backtracking search for code matrices, and for functions that admit one.

Columns are assigned one qubit at a time as pairs ``(x_q, x_{k+q})``.  Two
symmetries of the acceptance conditions are factored out:

* local symplectic maps on one qubit permute ``{x_q, x_{k+q}, x_q ^ x_{k+q}}``
  arbitrarily, so each pair is taken with ``x_q < x_{k+q} < x_q ^ x_{k+q}``;
* qubit permutations reorder pairs, so pairs are taken in nondecreasing order.

Neither changes the row space conditions or the error weights, so every
solution has exactly one representative in the explored space.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .boolfn import BooleanFunction
from .qecc import CodeCandidate, CodeCertificate, CodeError, max_distance, verify
from .symplectic import SymplecticMatrix

MODES = ("first", "count", "exhaustive")
F_SOURCES = ("given", "monomials", "enumerate", "random")


class SearchRejected(CodeError):
    """The requested parameters are outside what the construction can reach."""


@dataclass
class ColumnSearchResult:
    status: str  # "found", "none" (space exhausted), or "budget"
    candidates: list[CodeCandidate]
    nodes: int

    @property
    def found(self) -> bool:
        return bool(self.candidates)


def _alt_rank(g: list[int]) -> int:
    """GF(2) rank of a matrix given as row bitmasks."""
    basis: dict[int, int] = {}
    for r in g:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def _pair_gram(x: int, z: int, k: int) -> tuple[int, ...]:
    """Rows of ``x z^T + z x^T`` (row 1 of the matrix is the top bit of ``x``)."""
    rows = []
    for r in range(k):
        bit = k - 1 - r
        rows.append(((z if x >> bit & 1 else 0) ^ (x if z >> bit & 1 else 0)))
    return tuple(rows)


def canonical_pairs(columns, k: int) -> tuple[tuple[int, int], ...]:
    """Representative of a column list under per-qubit and qubit-permutation symmetry."""
    pairs = []
    for q in range(k):
        tri = sorted((columns[q], columns[k + q], columns[q] ^ columns[k + q]))
        pairs.append((tri[0], tri[1]))
    return tuple(sorted(pairs))


def columns_from_pairs(pairs, k: int) -> list[int]:
    return [p[0] for p in pairs] + [p[1] for p in pairs]


class _ColumnSearch:
    def __init__(self, f: BooleanFunction, k: int, d: int):
        self.f, self.k, self.d = f, k, d
        self.ok = [bool(b) for b in f.cset_mask()]
        ok = self.ok
        pairs = []
        for x in range(1, 1 << k):
            if not ok[x]:
                continue
            for z in range(x + 1, 1 << k):
                if ok[z] and z < x ^ z and ok[x ^ z]:
                    pairs.append((x, z))
        self.pairs = pairs
        self.grams = [_pair_gram(x, z, k) for x, z in pairs]

    def branch(self, first: int, cap: int, mode: str) -> tuple[list[tuple[int, tuple]], int, bool]:
        """Search below the choice ``pairs[first]`` for qubit 1.

        Returns ``(solutions, nodes, hit_cap)`` where each solution carries the
        local node count at which it was found.
        """
        k, d = self.k, self.d
        ok, pairs, grams = self.ok, self.pairs, self.grams
        solutions: list[tuple[int, tuple]] = []
        nodes = 0
        hit_cap = False

        def extend_images(levels, tri):
            new_levels = [levels[0]]
            for j in range(1, d):
                fresh = {t ^ u for t in tri for u in levels[j - 1]}
                for s in fresh:
                    if s == 0 or not ok[s]:
                        return None
                new_levels.append(levels[j] | fresh)
            return new_levels

        def rec(q, start, chosen, levels, gram, basis_span):
            nonlocal nodes, hit_cap
            remaining = k - q
            if remaining == 0:
                if any(gram) or len(basis_span) < k:
                    return False
                solutions.append((nodes, tuple(chosen)))
                return mode == "first"
            if _alt_rank(list(gram)) > 2 * remaining:
                return False
            if len(basis_span) + 2 * remaining < k:
                return False
            for idx in range(start, len(pairs)):
                if nodes >= cap:
                    hit_cap = True
                    return True
                nodes += 1
                x, z = pairs[idx]
                if remaining == 1 and tuple(a ^ b for a, b in zip(gram, grams[idx])) != (0,) * k:
                    continue
                lv = extend_images(levels, (x, z, x ^ z))
                if lv is None:
                    continue
                span = _extend_span(basis_span, (x, z))
                new_gram = tuple(a ^ b for a, b in zip(gram, grams[idx]))
                if rec(q + 1, idx, chosen + [(x, z)], lv, new_gram, span):
                    return True
            return False

        empty = [{0}] + [set() for _ in range(d - 1)]
        if first >= len(pairs):
            return solutions, nodes, hit_cap
        nodes += 1
        x, z = pairs[first]
        lv = extend_images(empty, (x, z, x ^ z))
        if lv is not None and cap > 0:
            rec(1, first, [(x, z)], lv, grams[first], _extend_span({}, (x, z)))
        elif cap <= 0:
            hit_cap = True
        return solutions, nodes, hit_cap


def _extend_span(basis: dict[int, int], vectors) -> dict[int, int]:
    out = dict(basis)
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in out:
                out[top] = v
                break
            v ^= out[top]
    return out


def _run_branch(args):
    f_bits, m, k, d, first, cap, mode = args
    s = _ColumnSearch(BooleanFunction(m, f_bits), k, d)
    return s.branch(first, cap, mode)


def search_columns(
    f: BooleanFunction, k: int, d: int, budget: int = 10**6, mode: str = "first", jobs: int = 1
) -> ColumnSearchResult:
    """Find matrices ``A`` making ``(f, A, d)`` a valid candidate.

    ``mode="first"`` stops at the first solution; any other mode collects
    every canonical solution.  The node budget is applied as if branches were
    explored one after another, so results do not depend on ``jobs``.
    """
    if f.m != k:
        raise CodeError(f"function has {f.m} variables, expected {k}")
    if d < 2:
        raise CodeError("target distance must be at least 2")
    if d > max_distance(k):
        raise SearchRejected(f"distance {d} exceeds the ceiling {max_distance(k)} for k={k}")
    if f.weight == 0:
        return ColumnSearchResult("none", [], 0)

    s = _ColumnSearch(f, k, d)
    n = len(s.pairs)
    single = "first" if mode == "first" else "all"
    if jobs > 1 and n > 1:
        args = [(f.bits, f.m, k, d, i, budget, single) for i in range(n)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            branch_results = list(pool.map(_run_branch, args))
    else:
        branch_results = None

    found: list[tuple] = []
    used = 0
    status = "none"
    for i in range(n):
        remaining = budget - used
        if remaining <= 0:
            status = "budget"
            break
        if branch_results is None:
            sols, nodes, hit = s.branch(i, remaining, single)
        else:
            sols, nodes, hit = branch_results[i]
            sols = [(at, sol) for at, sol in sols if at <= remaining]
            hit = hit or nodes > remaining
            nodes = min(nodes, remaining)
            if mode == "first" and sols:
                nodes = sols[0][0]
        if mode == "first" and sols:
            found.append(sols[0][1])
            used += nodes
            status = "found"
            break
        found.extend(sol for _, sol in sols)
        used += nodes
        if hit:
            status = "budget"
            break
    else:
        status = "found" if found else "none"
    if status == "none" and found:
        status = "found"

    candidates = []
    for pairs in found:
        A = SymplecticMatrix.from_columns(columns_from_pairs(pairs, k), k)
        candidates.append(CodeCandidate(k, d, f, A))
    return ColumnSearchResult(status, candidates, used)


# -- function sources ------------------------------------------------------------


@dataclass
class SearchSpec:
    k: int
    M: int
    d: int
    mode: str = "first"
    budget: int = 10**6
    f_source: str = "monomials"
    f: BooleanFunction | None = None
    seed: int = 0
    restarts: int = 100
    jobs: int = 1

    def __post_init__(self):
        if self.mode not in MODES:
            raise CodeError(f"unknown mode {self.mode!r}")
        if self.f_source not in F_SOURCES:
            raise CodeError(f"unknown function source {self.f_source!r}")
        if self.k < 1:
            raise CodeError("k must be positive")
        if self.d > max_distance(self.k):
            raise SearchRejected(f"distance {self.d} exceeds the ceiling {max_distance(self.k)} for k={self.k}")
        if not 1 <= self.M <= 1 << self.k:
            raise CodeError(f"M must lie in 1..2^{self.k}")
        if self.f_source == "given":
            if self.f is None:
                raise CodeError("f_source 'given' needs a function")
            if self.f.m != self.k or self.f.weight != self.M:
                raise CodeError("given function does not match k and M")


def function_candidates(spec: SearchSpec) -> Iterator[BooleanFunction]:
    k, M = spec.k, spec.M
    if spec.f_source == "given":
        yield spec.f
        return
    if spec.f_source == "monomials":
        if M & (M - 1):
            return
        s = M.bit_length() - 1
        # the top k-s variables first, then every other variable subset
        top = tuple(range(s + 1, k + 1))
        yield BooleanFunction.monomial(k, top)
        for subset in itertools.combinations(range(1, k + 1), k - s):
            if subset != top:
                yield BooleanFunction.monomial(k, subset)
        return
    if spec.f_source == "enumerate":
        # translating the support leaves the complementary set unchanged
        for rest in itertools.combinations(range(1, 1 << k), M - 1):
            yield BooleanFunction.from_support(k, (0,) + rest)
        return
    rng = random.Random(spec.seed)
    for _ in range(spec.restarts):
        rest = rng.sample(range(1, 1 << k), M - 1)
        yield BooleanFunction.from_support(k, [0] + sorted(rest))


@dataclass
class SearchOutcome:
    certificates: list[CodeCertificate] = field(default_factory=list)
    nodes: int = 0
    functions_tried: int = 0
    status: str = "none"


def search_codes(spec: SearchSpec) -> Iterator[CodeCertificate]:
    """Yield certificates for ``((k, M, d))`` codes; see :func:`run_search` for totals."""
    yield from run_search(spec).certificates


def run_search(spec: SearchSpec) -> SearchOutcome:
    out = SearchOutcome()
    col_mode = "first" if spec.mode in ("first", "count") else "exhaustive"
    exhausted_all = True
    for f in function_candidates(spec):
        remaining = spec.budget - out.nodes
        if remaining <= 0:
            exhausted_all = False
            break
        out.functions_tried += 1
        res = search_columns(f, spec.k, spec.d, remaining, col_mode, spec.jobs)
        out.nodes += res.nodes
        for cand in res.candidates:
            cert = verify(cand)
            if not cert.ok:
                raise AssertionError(f"search produced an invalid candidate: {cert.reason}")
            out.certificates.append(cert)
        if res.status == "budget":
            exhausted_all = False
            break
        if spec.mode == "first" and out.certificates:
            break
    if out.certificates:
        out.status = "found"
    else:
        out.status = "none" if exhausted_all else "budget"
    return out
