"""Centers, integrals, the trace map and the Higman ideal."""

import pytest

from hopfmod import linalg
from hopfmod.center import (center_basis, cointegral, frobenius_map, higman_ideal, in_span,
                            is_central, is_unimodular, left_integral, right_integral, span_equal)
from hopfmod.families import dk2_higman_elements, dnichols, nichols, uqsl2
from hopfmod.hopf import vclean


@pytest.mark.parametrize("ctor,param,dim", [(uqsl2, 3, 4), (uqsl2, 5, 7), (dnichols, 2, 11)])
def test_center_dimension(ctor, param, dim):
    Z = center_basis(ctor(param).H).elements
    assert len(Z) == dim
    assert all(is_central(ctor(param).H, z) for z in Z)


@pytest.mark.parametrize("ctor,param,dim", [(uqsl2, 3, 2), (uqsl2, 5, 3), (dnichols, 1, 3),
                                            (dnichols, 2, 3)])
def test_higman_dimension_and_centrality(ctor, param, dim):
    inst = ctor(param)
    hig = higman_ideal(inst.H, inst.ribbon.G, inst.integrals.Lambda)
    assert len(hig) == dim
    Z = center_basis(inst.H).elements
    assert all(in_span(inst.H, h, Z) for h in hig)


def test_dk2_higman_matches_reference_basis():
    inst = dnichols(2)
    hig = higman_ideal(inst.H, inst.ribbon.G, inst.integrals.Lambda)
    assert span_equal(inst.H, hig, dk2_higman_elements(inst.H))


@pytest.mark.parametrize("ctor,param", [(uqsl2, 3), (uqsl2, 5), (dnichols, 1), (dnichols, 2)])
def test_integrals_match_closed_forms(ctor, param):
    inst = ctor(param)
    H = inst.H
    Lam, lam = inst.integrals.Lambda.v, inst.integrals.lam.v
    assert linalg.rank([left_integral(H).v, Lam], H.dim, H.F) == 1
    assert linalg.rank([cointegral(H, "right").v, lam], H.dim, H.F) == 1
    pairing = sum((lam[k] * c for k, c in Lam.items() if k in lam), H.F.zero)
    assert pairing == H.F.one
    assert inst.integrals.normalized


@pytest.mark.parametrize("ctor,param,flag", [(nichols, 1, False), (nichols, 2, True),
                                             (nichols, 3, False), (dnichols, 1, True),
                                             (dnichols, 2, True)])
def test_unimodularity_flags(ctor, param, flag):
    assert is_unimodular(ctor(param).H) is flag


def test_left_and_right_integrals_of_sweedler_differ():
    H = nichols(1).H
    assert linalg.rank([left_integral(H).v, right_integral(H).v], H.dim, H.F) == 2


def test_frobenius_map_pairs_integral_to_one():
    inst = dnichols(2)
    H = inst.H
    psi = frobenius_map(H, inst.integrals.lam, H.unit)
    assert psi.v == vclean(inst.integrals.lam.v)


def test_uqsl2_canonical_blocks_are_orthogonal():
    inst = uqsl2(5)
    H, cc = inst.H, inst.canonical_center
    total = {}
    for i, Pi in enumerate(cc.P):
        for j, Pj in enumerate(cc.P):
            assert vclean(H.mul(Pi, Pj)) == (vclean(Pj) if i == j else {})
        for k, c in Pi.items():
            total[k] = total.get(k, H.F.zero) + c
    assert vclean(total) == H.unit
    for j in range(1, cc.h + 1):
        for Np in (cc.Nplus[j], cc.Nminus[j]):
            assert vclean(H.mul(cc.P[j], Np)) == vclean(Np)
            assert vclean(H.mul(Np, cc.Nplus[j])) == {}
            assert vclean(H.mul(Np, cc.Nminus[j])) == {}
