import pytest

from qecc_forge.codebook import additive_2m, laflamme_5_2_3
from qecc_forge.exactmat import ExactMatrix
from qecc_forge.oqec import build_oqec, certify_oqec
from qecc_forge.qecc import CodeError


def _code(t, s=2):
    return build_oqec(4, s, t, 2, additive_2m(2).A)


def test_4222_certifies():
    code = _code(1)
    assert (code.logical_dim, code.gauge_dim) == (2, 2)
    rep = certify_oqec(code)
    assert rep.ok, rep.checks
    assert any(name.startswith("d_") for name in rep.checks)
    assert len(code.stabilizers) == 2
    assert len(code.gauge) == 4
    assert len(code.logical) == 2


def test_t_equals_s_is_stabilizer_code():
    code = _code(2)
    rep = certify_oqec(code)
    assert rep.ok
    assert code.gauge_pairs == []
    assert any("ordinary stabilizer" in n for n in rep.notes)
    P = ExactMatrix.identity(16)
    for g in code.stabilizers:
        P = P @ (ExactMatrix.identity(16) + g.to_matrix()).scale(1, 1)
    assert code.projector() == P
    assert P.trace() == 4


def test_t_zero():
    rep = certify_oqec(_code(0))
    assert rep.ok
    assert any("zero logical" in n for n in rep.notes)


def test_laflamme_operator_code():
    c = laflamme_5_2_3()
    code = build_oqec(5, 1, 1, 3, c.A)
    assert certify_oqec(code).ok
    assert [str(s) for s in code.stabilizers] == ["ZXXZI", "IZXXZ", "ZIZXX", "XZIZX"]


def test_corrupted_x_row_fails_relations():
    code = _code(1)
    code.x_rows[0] ^= code.x_rows[1]
    rep = certify_oqec(code)
    assert not rep.checks["a_virtual_qubit_relations"]
    assert not rep.ok


def test_parameter_validation():
    A = additive_2m(2).A
    with pytest.raises(CodeError):
        build_oqec(4, 2, 3, 2, A)
    with pytest.raises(CodeError):
        build_oqec(4, 2, 1, 3, A)


def test_json_fields():
    data = _code(1).to_json(certify_oqec(_code(1)))
    assert data["params"] == [4, 2, 2, 2]
    assert data["certification"]["ok"]
    assert data["S"] == ["ZZZZ", "XXXX"]
