import itertools
import time

import pytest

from qecc_forge.boolfn import BooleanFunction
from qecc_forge.codebook import rains_5_6_2, rains_function
from qecc_forge.qecc import CodeCandidate, CodeError, verify
from qecc_forge.search import (
    SearchRejected,
    SearchSpec,
    canonical_pairs,
    run_search,
    search_columns,
)
from qecc_forge.symplectic import SymplecticMatrix


def _brute_force(f, k, d):
    """Canonical classes of every valid column assignment."""
    found = set()
    for cols in itertools.product(range(1 << k), repeat=2 * k):
        A = SymplecticMatrix.from_columns(list(cols), k)
        if verify(CodeCandidate(k, d, f, A)).ok:
            found.add(canonical_pairs(cols, k))
    return found


@pytest.mark.parametrize("k,bits", [(2, 0b0001), (2, 0b0011), (2, 0b0110), (3, 0b00010001), (3, 0b00000001), (3, 0b00010110)])
def test_pruning_is_safe(k, bits):
    f = BooleanFunction(k, bits)
    res = search_columns(f, k, 2, mode="exhaustive")
    assert res.status in ("found", "none")
    got = {canonical_pairs(c.A.columns, k) for c in res.candidates}
    assert got == _brute_force(f, k, 2)


def test_every_candidate_verifies():
    res = search_columns(rains_function(), 5, 2, mode="exhaustive")
    assert res.candidates
    assert all(verify(c).ok for c in res.candidates)
    assert canonical_pairs(rains_5_6_2().A.columns, 5) in {canonical_pairs(c.A.columns, 5) for c in res.candidates}


@pytest.mark.parametrize("mode", ["first", "exhaustive"])
def test_jobs_do_not_change_results(mode):
    f = rains_function()
    serial = search_columns(f, 5, 2, mode=mode, budget=3000)
    parallel = search_columns(f, 5, 2, mode=mode, budget=3000, jobs=2)
    assert serial.status == parallel.status
    assert serial.nodes == parallel.nodes
    assert [c.A for c in serial.candidates] == [c.A for c in parallel.candidates]


def test_budget_is_reported():
    res = search_columns(rains_function(), 5, 2, mode="exhaustive", budget=50)
    assert res.status == "budget"
    assert res.nodes <= 50


def test_rains_given_function():
    out = run_search(SearchSpec(k=5, M=6, d=2, f_source="given", f=rains_function()))
    assert out.status == "found"
    assert out.certificates[0].ok


def test_laflamme_by_monomials():
    out = run_search(SearchSpec(k=5, M=2, d=3))
    assert out.status == "found"
    cert = out.certificates[0]
    assert cert.additive
    assert len(cert.stabilizers) == 4


def test_no_22_2_code():
    out = run_search(SearchSpec(k=2, M=2, d=2, f_source="enumerate", mode="exhaustive"))
    assert out.status == "none"
    assert out.certificates == []


def test_rejection_is_immediate():
    t0 = time.perf_counter()
    with pytest.raises(SearchRejected):
        SearchSpec(k=5, M=2, d=5)
    with pytest.raises(SearchRejected):
        search_columns(rains_function(), 5, 5)
    assert time.perf_counter() - t0 < 0.01


def test_spec_validation():
    with pytest.raises(CodeError):
        SearchSpec(k=3, M=9, d=2)
    with pytest.raises(CodeError):
        SearchSpec(k=3, M=2, d=2, mode="bogus")
    with pytest.raises(CodeError):
        SearchSpec(k=3, M=2, d=2, f_source="given")


def test_random_source_is_seeded():
    a = run_search(SearchSpec(k=4, M=4, d=2, f_source="random", seed=5, restarts=5, mode="count"))
    b = run_search(SearchSpec(k=4, M=4, d=2, f_source="random", seed=5, restarts=5, mode="count"))
    assert [c.digest for c in a.certificates] == [c.digest for c in b.certificates]
    assert a.functions_tried == b.functions_tried
