"""R-matrices, ribbon elements and the Drinfeld map."""

import pytest

from hopfmod.families import dk_ribbon_candidate, dnichols, nichols, uqsl2
from hopfmod.families.uqsl2_alg import uqsl2_drinfeld_q
from hopfmod.hopf import vclean
from hopfmod.ribbon import (check_drinfeld_element, drinfeld_element, drinfeld_matrix,
                            invert_element, is_factorizable, r_inverse, times_pure_tensor,
                            verify_quasitriangular,
                            verify_ribbon)


@pytest.mark.parametrize("ctor,param", [(uqsl2, 3), (uqsl2, 5), (dnichols, 1), (dnichols, 2),
                                        (nichols, 2), (nichols, 4)])
def test_r_matrix_is_quasitriangular(ctor, param):
    inst = ctor(param)
    rep = verify_quasitriangular(inst.H, inst.ribbon.R)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("ctor,param", [(uqsl2, 3), (uqsl2, 5), (dnichols, 2), (nichols, 2)])
def test_ribbon_element_passes(ctor, param):
    inst = ctor(param)
    rep = verify_ribbon(inst.H, inst.ribbon.R, inst.ribbon.v, inverse=inst.ribbon_inverse)
    assert rep.ok, rep.failures()


def test_even_ribbon_formula_fails_for_odd_n():
    inst = dnichols(1)
    v = dk_ribbon_candidate(1)
    for inverse in (True, False):
        assert not verify_ribbon(inst.H, inst.ribbon.R, v, inverse=inverse).ok


def test_odd_double_has_no_ribbon_attached():
    assert dnichols(1).ribbon.v is None
    assert nichols(1).ribbon is None


@pytest.mark.parametrize("ctor,param,rank", [(uqsl2, 3, 27), (uqsl2, 5, 125), (dnichols, 2, 64),
                                             (dnichols, 1, 16)])
def test_factorizable_ranks(ctor, param, rank):
    inst = ctor(param)
    assert is_factorizable(inst.H, inst.ribbon.R, inst.ribbon.Q) == (True, rank)


def test_nichols_quotient_r_matrix_is_degenerate():
    fact, rank = is_factorizable(nichols(2).H, nichols(2).ribbon.R)
    assert not fact and rank < 8


def test_r_inverse_is_antipode_on_first_leg():
    inst = dnichols(2)
    H, R = inst.H, inst.ribbon.R.v
    assert H.tmul(R, r_inverse(H, R)) == H.tone(2)


def test_closed_form_monodromy_matches_product():
    # R21 R from the PBW closed form against the direct tensor product
    H = uqsl2(3).H
    assert vclean(uqsl2_drinfeld_q(H)) == vclean(drinfeld_matrix(H, uqsl2(3).ribbon.R).v)


def test_drinfeld_element_and_balancing():
    inst = uqsl2(3)
    H = inst.H
    u = drinfeld_element(H, inst.ribbon.R)
    rep = check_drinfeld_element(H, u, inst.ribbon.G)
    assert rep.ok, rep.failures()
    # v^-1 u is grouplike: it is the balancing element K up to the convention
    w = vclean(H.mul(invert_element(H, inst.ribbon.v), u.v))
    assert len(w) == 1


def test_pure_tensor_product_matches_generic():
    inst = dnichols(1)
    H = inst.H
    Q = drinfeld_matrix(H, inst.ribbon.R).v
    x, y = inst.idempotents[0], inst.integrals.Lambda.v
    assert vclean(times_pure_tensor(H, Q, x, y)) == vclean(H.tmul(Q, H.tensor(x, y)))


def test_inverse_ribbon_element_fails_direct_convention():
    inst = uqsl2(3)
    H = inst.H
    vinv = invert_element(H, inst.ribbon.v)
    rep = verify_ribbon(H, inst.ribbon.R, vinv)
    assert rep.failures() == ["comult"]
    assert verify_ribbon(H, inst.ribbon.R, vinv, inverse=True).ok
