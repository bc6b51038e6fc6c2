"""Acceptance criteria 1-15, one test each; results are also listed in the terminal summary."""

import json
import time

import pytest

from conftest import ACCEPTANCE
from hopfmod import linalg
from hopfmod.center import (center_basis, cointegral, higman_ideal, is_unimodular, left_integral,
                            span_equal)
from hopfmod.cyclo import sqrt_integer
from hopfmod.families import (build, dk2_higman_elements, dk_ribbon_candidate, dnichols, nichols,
                              uqsl2)
from hopfmod.families.compare import fusion_table_compare
from hopfmod.families.serialize import dumps, export_instance, import_instance
from hopfmod.families.nichols_alg import dk_index, popcount
from hopfmod.hopf import vclean, verify_hopf_axioms
from hopfmod.modular import (LMMaps, cw_modular_data, kerler_blocks, mixed_fusion_matrices,
                             restrict, verlinde_check)
from hopfmod.repnlib import cartan_matrix, hopf_link_s_matrix
from hopfmod.ribbon import is_factorizable, verify_quasitriangular, verify_ribbon
from hopfmod.weil import (congruence_certify, even_odd_split, level2_piece, std_piece,
                          trivial_piece, weil_piece)


def record(n, checks: dict, extra: str = ""):
    """Store the outcome of criterion n and fail with the names of the broken checks."""
    bad = [k for k, ok in checks.items() if not ok]
    detail = ("all checks hold" if not bad else "failed: " + ", ".join(bad)) + (f"; {extra}" if extra else "")
    ACCEPTANCE[n] = (not bad, detail)
    assert not bad, detail


@pytest.fixture(scope="module")
def bundles():
    out = {}
    for inst in (uqsl2(3), uqsl2(5), dnichols(2)):
        data = inst.cw_input()
        B = cw_modular_data(data)
        out[inst.name] = (inst, data, B)
    return out


def test_criterion_01_hopf_axioms():
    checks, timing = {}, {}
    for fam, p in [("uqsl2", 3), ("uqsl2", 5), ("nichols", 1), ("nichols", 2), ("nichols", 3),
                   ("dnichols", 1), ("dnichols", 2)]:
        t0 = time.perf_counter()
        checks[f"{fam}({p})"] = verify_hopf_axioms(build(fam, p).H, stop_at_first=False).ok
        timing[f"{fam}({p})"] = time.perf_counter() - t0
    checks["uqsl2(5) under 300 s"] = timing["uqsl2(5)"] < 300
    record(1, checks, f"uqsl2(5) took {timing['uqsl2(5)']:.1f} s")


def test_criterion_02_ribbon_and_quasitriangular():
    checks = {}
    for inst in (uqsl2(3), uqsl2(5), dnichols(2)):
        checks[f"{inst.name} R"] = verify_quasitriangular(inst.H, inst.ribbon.R).ok
        checks[f"{inst.name} ribbon"] = verify_ribbon(inst.H, inst.ribbon.R, inst.ribbon.v,
                                                      inverse=inst.ribbon_inverse).ok
    d1 = dnichols(1)
    checks["dnichols(1) R"] = verify_quasitriangular(d1.H, d1.ribbon.R).ok
    v = dk_ribbon_candidate(1)
    checks["even formula fails on dnichols(1)"] = not any(
        verify_ribbon(d1.H, d1.ribbon.R, v, inverse=inv).ok for inv in (True, False))
    record(2, checks)


def test_criterion_03_factorizability():
    checks = {}
    for inst, rank in ((uqsl2(3), 27), (uqsl2(5), 125), (dnichols(2), 64)):
        checks[f"{inst.name} rank {rank}"] = is_factorizable(inst.H, inst.ribbon.R) == (True, rank)
    fact, rank = is_factorizable(nichols(2).H, nichols(2).ribbon.R)
    checks["nichols(2) rank < 8"] = not fact and rank < 8
    record(3, checks, f"nichols(2) rank {rank}")


def test_criterion_04_integrals():
    checks = {}
    for inst in (uqsl2(3), uqsl2(5), dnichols(1), dnichols(2)):
        H = inst.H
        Lam, lam = inst.integrals.Lambda.v, inst.integrals.lam.v
        checks[f"{inst.name} Lambda"] = linalg.rank([left_integral(H).v, Lam], H.dim, H.F) == 1
        checks[f"{inst.name} lambda"] = linalg.rank([cointegral(H, "right").v, lam], H.dim, H.F) == 1
        pairing = sum((lam[k] * c for k, c in Lam.items() if k in lam), H.F.zero)
        checks[f"{inst.name} lambda(Lambda) = 1"] = pairing == H.F.one
    for inst, flag in ((nichols(1), False), (nichols(2), True), (dnichols(1), True), (dnichols(2), True)):
        checks[f"{inst.name} unimodular={flag}"] = is_unimodular(inst.H) is flag
    record(4, checks)


def test_criterion_05_center_and_higman():
    checks = {}
    for inst, zd, hd in ((uqsl2(3), 4, 2), (uqsl2(5), 7, 3), (dnichols(2), 11, 3)):
        checks[f"{inst.name} center {zd}"] = len(center_basis(inst.H).elements) == zd
        hig = higman_ideal(inst.H, inst.ribbon.G, inst.integrals.Lambda)
        checks[f"{inst.name} Higman {hd}"] = len(hig) == hd
        if inst.family == "dnichols":
            checks["dnichols(2) Higman span"] = span_equal(inst.H, hig, dk2_higman_elements(inst.H))
    record(5, checks)


def test_criterion_06_cartan():
    checks = {"uqsl2(3)": cartan_matrix(uqsl2(3).table) == [[2, 2, 0], [2, 2, 0], [0, 0, 1]]}
    for n in (1, 2):
        m = 1 << (2 * n - 1)
        checks[f"dnichols({n})"] = cartan_matrix(dnichols(n).table) == [
            [m, m, 0, 0], [m, m, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    record(6, checks)


def test_criterion_07_cw_modular_data(bundles):
    inst, _, B = bundles["uqsl2(3)"]
    F = inst.H.F
    r = sqrt_integer(3, F.N).inverse()
    S3 = [[r, r], [r * 2, -r]]
    _, _, D = bundles["dnichols(2)"]
    g = dnichols(2).golden
    checks = {
        "uqsl2(3) S_CW": B.S_CW == S3,
        "uqsl2(3) S_CW via Cartan": B.S_CW_cartan == S3,
        "dnichols(2) S_CW": D.S_CW == g["S_CW"],
        "dnichols(2) S_CW via Cartan": D.S_CW_cartan == g["S_CW"],
        "dnichols(2) T_CW": D.T_CW == g["T_CW"],
    }
    record(7, checks)


def test_criterion_08_mixed_fusion_and_verlinde(bundles):
    checks = {}
    expect = {"uqsl2(3)": {"V2": [2, -1], "V3": [3, 0]},
              "dnichols(2)": {"V_KKb": [-1, 1, 1], "V_K": [0, 4, -4]}}
    for name, diag in expect.items():
        inst, data, B = bundles[name]
        F = inst.H.F
        rep = verlinde_check(B, data)
        for k, d in diag.items():
            checks[f"{name} N[{k}]"] = B.fusion[k] == inst.golden["fusion_mixed"][k]
            checks[f"{name} diag[{k}]"] = rep.diagonal[k] == [F.from_int(x) for x in d]
        checks[f"{name} Verlinde"] = all(rep.entrywise.values())
    record(8, checks)


def test_criterion_09_fusion_tables():
    checks = {}
    for inst in (uqsl2(3), dnichols(2)):
        rep = fusion_table_compare(inst)
        checks[f"{inst.name} ({len(rep.rows)} products)"] = rep.ok
    for inst, X, exp in ((uqsl2(3), "P1", {"V3": 4, "P1": 2, "P2": 2}),
                         (dnichols(2), "P_1", {"P_1": 8, "P_KKb": 8})):
        checks[f"{inst.name} {X}^2"] = fusion_table_compare(inst, [(X, X, exp)]).ok
    record(9, checks)


def test_criterion_10_kerler_blocks():
    checks = {}
    for l in (3, 5):
        rep = kerler_blocks(uqsl2(l))
        checks[f"l={l} off-blocks zero"] = rep.off_blocks_zero
        checks[f"l={l} blocks"] = rep.ok
    record(10, checks)


def test_criterion_11_congruence(bundles):
    checks = {}
    inst, _, D = bundles["dnichols(2)"]
    F = inst.H.F
    c = congruence_certify(D.S_CW, D.T_CW, [[trivial_piece(F), level2_piece(F)]])
    checks["Higman(dnichols(2)) = triv + N1, level 2 = ord T"] = (
        c.found and (c.level, c.ord_T) == (2, 2))
    for l in (3, 5):
        _, _, B = bundles[f"uqsl2({l})"]
        sp = even_odd_split(l)
        c = congruence_certify(B.S_CW, B.T_CW, [[weil_piece("V_even", sp.S_even, sp.T_even, sp.F)]])
        checks[f"Higman(uqsl2({l})) = V_even"] = c.found
    full = (1 << 2) - 1
    H = inst.H
    one = dict(H.unit)
    kk = dk_index(2, 1, 1, 0, 0)
    one[kk] = one.get(kk, F.zero) + F.one
    Z = [vclean(H.mul(one, {dk_index(2, 0, 0, S, T): F.one}))
         for S in range(full + 1) for T in range(full + 1) if (popcount(S) + popcount(T)) % 2 == 0]
    lm = LMMaps(H, inst.ribbon.R.v, inst.integrals.lam.v, inst.ribbon.v.v)
    c = congruence_certify(restrict(lm.S, Z, F), restrict(lm.T, Z, F),
                           [[trivial_piece(F)] * 4 + [std_piece(F, 2)]])
    checks["Z_Lambda = 4 triv + std^2"] = c.found
    c = congruence_certify(D.S_LM, D.T_LM, [[trivial_piece(F)] * 5 + [level2_piece(F), std_piece(F, 2)]])
    checks["center = 5 triv + N1 + std^2"] = c.found and not c.congruence
    record(11, checks)


def test_criterion_12_hopf_link_rank():
    inst = dnichols(2)
    V = inst.modules
    res = hopf_link_s_matrix([V["V_1"], V["V_KKb"]], inst.ribbon.R, inst.ribbon.G)
    record(12, {"rank 1": res.rank == 1})


def test_criterion_13_rank_finiteness_witness():
    t1, t2 = dnichols(1).table, dnichols(2).table
    c = [mixed_fusion_matrices(dnichols(n).cw_input(require_ribbon=False))["V_K"][1][0].to_fraction()
         for n in (1, 2)]
    record(13, {"total rank 6 for both": t1.total_rank == t2.total_rank == 6,
                "coefficients 2 and 8": c == [2, 8]})


def _criterion7_json(inst) -> str:
    B = cw_modular_data(inst.cw_input())
    return dumps({"S_CW": [[x.to_json() for x in r] for r in B.S_CW],
                  "S_CW_cartan": [[x.to_json() for x in r] for r in B.S_CW_cartan],
                  "T_CW": [[x.to_json() for x in r] for r in B.T_CW]})


def test_criterion_14_serialization():
    checks = {}
    for inst in (uqsl2(3), dnichols(2)):
        text = dumps(export_instance(inst))
        back = import_instance(json.loads(text))
        checks[f"{inst.name} export stable"] = dumps(export_instance(back)) == text
        checks[f"{inst.name} recompute identical"] = _criterion7_json(back) == _criterion7_json(inst)
    record(14, checks)


@pytest.mark.slow
def test_criterion_15_stretch():
    from hopfmod.cli import run_instance

    checks, times = {}, []
    for fam, p in (("uqsl2", 7), ("dnichols", 4)):
        t0 = time.perf_counter()
        # criteria 1-8; the modular task covers both S_CW routes and Verlinde
        recs = run_instance(fam, p, ["axioms", "ribbon", "center", "higman", "cartan",
                                     "modular"], use_cache=False)
        dt = time.perf_counter() - t0
        checks[f"{fam}({p}) checks"] = all(r["status"] != "fail" for r in recs)
        checks[f"{fam}({p}) under 30 min"] = dt < 1800
        times.append(f"{fam}({p}) {dt:.0f} s")
    record(15, checks, ", ".join(times))
