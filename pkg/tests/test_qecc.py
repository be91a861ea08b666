import random

import pytest

from qecc_forge.boolfn import BooleanFunction
from qecc_forge.codebook import (
    additive_2m,
    laflamme_5_2_3,
    nonadditive_2m,
    rains_5_6_2,
)
from qecc_forge.exactmat import ExactMatrix
from qecc_forge.pauli import PauliElement, conjugate
from qecc_forge.projlogic import evaluate
from qecc_forge.qecc import (
    CodeCandidate,
    CodeError,
    build_projector,
    conjugate_correspondence_check,
    distance_oracle,
    error_shift,
    extract_stabilizers,
    max_distance,
    structural_problem,
    verify,
)
from qecc_forge.symplectic import SymplecticMatrix, enumerate_errors, error_count, vec_from_str

BUNDLED = [additive_2m(2), additive_2m(3), nonadditive_2m(3), rains_5_6_2(), laflamme_5_2_3()]


def _oracle_ok(c):
    P = evaluate(c.f, c.family())
    return distance_oracle(P, c.k, c.d - 1).passed


@pytest.mark.parametrize("c", BUNDLED, ids=lambda c: c.name)
def test_bundled_codes_agree(c):
    assert verify(c).ok
    assert _oracle_ok(c)


def test_corrupted_bundles_agree():
    rng = random.Random(99)
    for _ in range(30):
        c = rng.choice(BUNDLED[:1] + BUNDLED[3:])
        cols = list(c.A.columns)
        i = rng.randrange(2 * c.k)
        cols[i] ^= rng.randrange(1, 1 << c.k)
        bad = CodeCandidate(c.k, c.d, c.f, SymplecticMatrix.from_columns(cols))
        if structural_problem(bad.A):
            assert not verify(bad).ok
            continue
        assert verify(bad).ok == _oracle_ok(bad)


def test_zeroed_column_rejected():
    c = additive_2m(2)
    cols = list(c.A.columns)
    cols[0] = 0
    bad = CodeCandidate(4, 2, c.f, SymplecticMatrix.from_columns(cols))
    assert not verify(bad).ok


def test_zero_shift_reason():
    f = BooleanFunction.from_support(1, [0])
    c = CodeCandidate(1, 2, f, SymplecticMatrix.from_strings(["0|1"]))
    rep = verify(c)
    assert not rep.ok
    assert rep.reason == "zero image"
    assert rep.failures[0].error == vec_from_str("1|0")[0]


def test_k1_oracle_fails_at_z():
    f = BooleanFunction.from_support(1, [0])
    c = CodeCandidate(1, 2, f, SymplecticMatrix.from_strings(["0|1"]))
    P = evaluate(f, c.family())
    res = distance_oracle(P, 1, 1)
    assert not res.passed
    assert PauliElement(1, res.violation).label() == "Z"


def test_ceiling():
    assert max_distance(5) == 4
    assert max_distance(4) == 4
    rep = verify(laflamme_5_2_3().with_distance(5))
    assert not rep.ok
    assert "ceiling" in rep.reason


def test_laflamme_fails_at_d4():
    assert not verify(laflamme_5_2_3().with_distance(4)).ok


def test_transcript_and_digest():
    cert = verify(laflamme_5_2_3())
    assert len(cert.transcript) == error_count(5, 2) == 105
    assert cert.digest == verify(laflamme_5_2_3()).digest
    data = cert.to_json(full_transcript=True)
    assert data["transcript_count"] == 105
    assert len(data["transcript"]) == 105


def test_all_failures():
    c = rains_5_6_2().with_distance(3)
    first = verify(c)
    every = verify(c, all_failures=True)
    assert not first.ok and not every.ok
    assert len(first.failures) == 1
    assert len(every.failures) > 1
    assert every.checked == error_count(5, 2)


def test_structural_rejection():
    A = SymplecticMatrix.from_strings(["10|00", "10|00"])
    c = CodeCandidate(2, 2, BooleanFunction(2, 1), A)
    assert "dependent" in verify(c).reason
    A = SymplecticMatrix.from_strings(["10|00", "00|10"])
    assert "symplectic product" in verify(CodeCandidate(2, 2, BooleanFunction(2, 1), A)).reason


def test_build_projector_properties():
    P = build_projector(rains_5_6_2())
    assert P.trace() == 6
    assert P.is_idempotent() and P.is_hermitian()
    with pytest.raises(CodeError):
        build_projector(rains_5_6_2().with_distance(3))


def test_example6_projector():
    c = additive_2m(2)
    half = lambda s: (ExactMatrix.identity(16) + PauliElement.from_string(s).to_matrix()).scale(1, 1)
    assert build_projector(c) == half("ZZZZ") @ half("XXXX")
    assert extract_stabilizers(c) == ["ZZZZ", "XXXX"]


def test_nonmonomial_has_no_stabilizers():
    assert extract_stabilizers(rains_5_6_2()) is None
    assert verify(rains_5_6_2()).additive is False


@pytest.mark.parametrize("c", [rains_5_6_2(), additive_2m(2)], ids=lambda c: c.name)
def test_conjugation_correspondence(c):
    P = evaluate(c.f, c.family())
    for w in enumerate_errors(c.k, 2):
        assert conjugate_correspondence_check(c, w, P)


def test_unswapped_shift_is_not_the_conjugation():
    c = rains_5_6_2()
    fam = c.family()
    P = evaluate(c.f, fam)
    mismatches = 0
    for w in enumerate_errors(5, 1):
        lhs = conjugate(PauliElement(5, w), P)
        if lhs != evaluate(c.f.shift(c.A.mat_vec(w)), fam):
            mismatches += 1
        assert lhs == evaluate(c.f.shift(error_shift(c.A, w)), fam)
    assert mismatches > 0


def test_bundle_roundtrip():
    for c in BUNDLED:
        assert CodeCandidate.from_bundle(c.to_bundle()) == c
    anf = {"k": 3, "d": 2, "f_anf": "v1 v2", "A_f": ["100|000", "010|000", "001|000"]}
    assert CodeCandidate.from_bundle(anf).f.support == (3, 7)
    with pytest.raises(CodeError):
        CodeCandidate.from_bundle({"k": 3, "d": 2})


def test_oracle_dimension_check():
    with pytest.raises(CodeError):
        distance_oracle(ExactMatrix.identity(8), 2, 1)


def test_oracle_parallel_agrees():
    c = laflamme_5_2_3()
    P = build_projector(c)
    assert distance_oracle(P, 5, 2, jobs=3).passed
    bad = distance_oracle(build_projector(rains_5_6_2()), 5, 2, jobs=3)
    ref = distance_oracle(build_projector(rains_5_6_2()), 5, 2)
    assert not bad.passed
    assert (bad.checked, bad.violation) == (ref.checked, ref.violation)
