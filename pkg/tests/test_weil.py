"""Quadratic modules, Gauss sums, Weil representations and congruence certificates."""

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfmod import linalg
from hopfmod.cyclo import approx, sqrt_integer
from hopfmod.families import dnichols, uqsl2
from hopfmod.families.nichols_alg import dk_index, popcount
from hopfmod.hopf import vclean
from hopfmod.modular import LMMaps, cw_modular_data, restrict, verify_modular_identities
from hopfmod.weil import (QuadraticModule, congruence_certify, even_odd_split, gauss_sum,
                          level2_piece, pointed_modular_data, projective_order, std_piece,
                          trivial_piece, weil_piece, weil_rep)


def numeric_gauss(m, c):
    return sum(cmath.exp(2j * cmath.pi * float(c) * a * a) for a in range(m))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, 2 * m - 1))))
def test_gauss_sum_matches_floating_point(mk):
    m, k = mk
    c = Fraction(k, 2 * m) if m % 2 == 0 else Fraction(k, m)
    M = QuadraticModule(m, c)
    assert abs(complex(*approx(gauss_sum(M))) - numeric_gauss(m, c)) < 1e-9


def test_gauss_sum_of_five_is_sqrt_five():
    M = QuadraticModule(5, Fraction(1, 5))
    g = gauss_sum(M)
    assert g == sqrt_integer(5, g.F.N)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_gauss_sum_modulus_squared(m):
    g = gauss_sum(QuadraticModule(m, Fraction(-1, m)))
    assert g * g.conj() == g.F.from_int(m)


def test_ill_defined_form_is_rejected():
    with pytest.raises(ValueError):
        QuadraticModule(3, Fraction(1, 2))


def test_degenerate_module_has_no_weil_rep():
    M = QuadraticModule(4, Fraction(1, 2))
    assert M.is_quadratic() and not M.is_nondegenerate()
    with pytest.raises(ValueError):
        weil_rep(M)


@pytest.mark.parametrize("m,c", [(3, Fraction(-1, 3)), (5, Fraction(2, 5)), (4, Fraction(1, 8))])
def test_weil_rep_is_projective_sl2z(m, c):
    M = QuadraticModule(m, c)
    W = weil_rep(M)
    ident = verify_modular_identities(W.S, W.T, W.F)
    assert ident.st_cubed_ok
    assert linalg.is_scalar_multiple(W.S, pointed_modular_data(M, W.F).S) is not None


@pytest.mark.parametrize("l", [3, 5])
def test_even_odd_split_is_block_diagonal(l):
    sp = even_odd_split(l)
    assert sp.blocks_zero
    h = (l - 1) // 2
    assert len(sp.S_even) == h + 1 and len(sp.S_odd) == h
    assert verify_modular_identities(sp.S_even, sp.T_even, sp.F).st_cubed_ok


def test_projective_orders():
    F = level2_piece(trivial_piece.__globals__["field"](8)).S[0][0].F
    assert projective_order(level2_piece(F).T, F) == 2
    assert projective_order(std_piece(F).T, F, bound=50) is None


@pytest.mark.parametrize("l", [3, 5])
def test_uqsl2_higman_is_even_weil_part(l):
    B = cw_modular_data(uqsl2(l).cw_input())
    sp = even_odd_split(l)
    cert = congruence_certify(B.S_CW, B.T_CW, [[weil_piece("V_even", sp.S_even, sp.T_even, sp.F)]])
    assert cert.found and cert.level == l and cert.ord_T == l


def test_dk2_higman_certificate():
    B = cw_modular_data(dnichols(2).cw_input())
    F = B.H.F
    cert = congruence_certify(B.S_CW, B.T_CW, [[trivial_piece(F)] * 3, [trivial_piece(F), level2_piece(F)]])
    assert cert.found
    assert cert.pieces == ["triv", "N1"]
    assert (cert.level, cert.ord_T) == (2, 2)


def _z_lambda(inst):
    H, F, n = inst.H, inst.H.F, inst.param
    KKb = dk_index(n, 1, 1, 0, 0)
    one = {k: c for k, c in H.unit.items()}
    one[KKb] = one.get(KKb, F.zero) + F.one
    return [vclean(H.mul(one, {dk_index(n, 0, 0, S, T): F.one}))
            for S in range(1 << n) for T in range(1 << n) if (popcount(S) + popcount(T)) % 2 == 0]


def test_dk2_z_lambda_and_full_center_certificates():
    inst = dnichols(2)
    H, F = inst.H, inst.H.F
    lm = LMMaps(H, inst.ribbon.R.v, inst.integrals.lam.v, inst.ribbon.v.v)
    Z = _z_lambda(inst)
    SZ, TZ = restrict(lm.S, Z, F), restrict(lm.T, Z, F)
    cert = congruence_certify(SZ, TZ, [[trivial_piece(F)] * 4 + [std_piece(F, 2)]])
    assert cert.found and cert.level is None
    B = cw_modular_data(inst.cw_input())
    full = congruence_certify(B.S_LM, B.T_LM,
                              [[trivial_piece(F)] * 5 + [level2_piece(F), std_piece(F, 2)]])
    assert full.found
    assert full.pieces == ["triv"] * 5 + ["N1", "std^2"]
    assert not full.congruence


def test_wrong_candidates_are_inconclusive():
    B = cw_modular_data(dnichols(2).cw_input())
    F = B.H.F
    cert = congruence_certify(B.S_CW, B.T_CW, [[trivial_piece(F)] * 3])
    assert not cert.found and cert.ord_T == 2
