"""Family constructors, golden comparison and serialization."""

import dataclasses
import json

import pytest

from hopfmod.families import build, dnichols, nichols, uqsl2
from hopfmod.families.compare import (first_mismatch, fusion_table_compare, golden_compare,
                                      mixed_fusion_compare, up_to_scalar)
from hopfmod.families.nichols_alg import dk_index
from hopfmod.families.serialize import dumps, export_instance, import_instance
from hopfmod.hopf import TensorElem, vclean, vscale
from hopfmod.modular import cw_modular_data, verlinde_check
from hopfmod.repnlib import decompose, tensor_module


@pytest.mark.parametrize("family,param,dim", [
    ("uqsl2", 3, 27), ("uqsl2", 5, 125), ("nichols", 1, 4), ("nichols", 2, 8),
    ("nichols", 3, 16), ("dnichols", 1, 16), ("dnichols", 2, 64),
])
def test_dimensions_and_orthogonal_idempotents(family, param, dim):
    inst = build(family, param)
    assert inst.H.dim == dim
    assert inst.check_orthogonal()


@pytest.mark.parametrize("bad", [2, 4, 1])
def test_uqsl2_rejects_bad_parameter(bad):
    with pytest.raises(ValueError, match="odd"):
        uqsl2(bad)


def test_unknown_family():
    with pytest.raises(ValueError, match="unknown family"):
        build("sl3", 3)


def test_sweedler_is_nichols_one():
    inst = nichols(1)
    assert inst.H.dim == 4
    assert inst.golden["cartan"] == [[1, 1], [1, 1]]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_projective_cover_square(n):
    inst = nichols(n)
    P = inst.modules["P_eps"]
    got = decompose(tensor_module(P, P), inst.table)
    m = 1 << (n - 1)
    assert got == {"P_eps": m, "P_Kb": m}


@pytest.mark.parametrize("n", [1, 2])
def test_dk_e_k_shape(n):
    inst = dnichols(n)
    H = inst.H
    full = (1 << n) - 1
    e = inst.idempotents[2]
    assert vclean(H.mul(e, e)) == vclean(e)
    signs = {(0, 0): 1, (1, 0): 1, (0, 1): -1, (1, 1): -1}
    ref = vclean(H.mul({dk_index(n, a, b, 0, 0): H.F.from_int(s) for (a, b), s in signs.items()},
                       {dk_index(n, 0, 0, full, full): H.F.one}))
    k = next(iter(ref))
    assert vclean(vscale(ref, e[k] / ref[k])) == vclean(e)


@pytest.mark.parametrize("make", [lambda: uqsl2(3), lambda: dnichols(2)])
def test_golden_compare_passes(make):
    inst = make()
    data = inst.cw_input()
    B = cw_modular_data(data)
    rep = golden_compare(inst, B, verlinde_check(B, data))
    assert rep.ok, rep.failures()
    tables = {r.table for r in rep.rows}
    assert {"S_CW", "T_CW", "cartan"} <= tables


def test_perturbed_r_matrix_is_caught():
    inst = dnichols(2)
    R2 = TensorElem(inst.H, vscale(inst.ribbon.R.v, inst.H.F.from_int(2)), 2)
    bad = dataclasses.replace(inst, ribbon=dataclasses.replace(inst.ribbon, R=R2))
    rep = golden_compare(bad, cw_modular_data(bad.cw_input()))
    assert not rep.ok
    fail = rep.failures()[0]
    assert fail.table == "S_CW" and "entry" in fail.witness


def test_mixed_fusion_without_ribbon():
    rep = mixed_fusion_compare(dnichols(1))
    assert rep.rows and rep.ok


def test_fusion_table_compare_reports_witness():
    inst = dnichols(1)
    assert fusion_table_compare(inst).ok
    rep = fusion_table_compare(inst, [("V_K", "V_K", {"V_1": 3})])
    assert not rep.ok
    assert rep.rows[0].witness["expected"] == {"V_1": 3}


def test_first_mismatch_and_scalar():
    F = uqsl2(3).H.F
    A = [[F.one, F.zero], [F.zero, F.zeta(3)]]
    assert first_mismatch(A, A, F) is None
    w = first_mismatch(A, [[F.one, F.zero], [F.zero, F.one]], F)
    assert w["entry"] == [1, 1]
    B = [[x * F.zeta(4) for x in r] for r in A]
    w, c = up_to_scalar(B, A, F)
    assert w is None and c == F.zeta(4)


@pytest.mark.parametrize("make", [lambda: uqsl2(3), lambda: dnichols(2)])
def test_serialization_round_trip(make):
    inst = make()
    s = dumps(export_instance(inst))
    back = import_instance(json.loads(s))
    assert dumps(export_instance(back)) == s
    a = cw_modular_data(inst.cw_input())
    b = cw_modular_data(back.cw_input())
    assert a.S_CW == b.S_CW and a.T_CW == b.T_CW


def test_import_rejects_unknown_schema():
    obj = export_instance(nichols(1))
    obj["schema"] = 99
    with pytest.raises(ValueError, match="schema"):
        import_instance(obj)
