"""Lyubashenko-Majid maps, Cohen-Westreich data, Verlinde and SL(2, Z) equivalence."""

from fractions import Fraction

import mpmath
import pytest

from hopfmod import linalg
from hopfmod.center import StructuralError
from hopfmod.cyclo import approx, field, sqrt_integer
from hopfmod.families import dnichols, uqsl2
from hopfmod.families.nichols_alg import dk_index, popcount
from hopfmod.hopf import vclean
from hopfmod.modular import (LMMaps, cw_modular_data, cyclotomic_containment, kerler_blocks,
                             minimal_conductor, mixed_fusion_matrices, restrict, sl2z_equivalence,
                             verify_modular_identities, verlinde_check)


@pytest.fixture(scope="module")
def u3():
    inst = uqsl2(3)
    data = inst.cw_input()
    return inst, data, cw_modular_data(data)


@pytest.fixture(scope="module")
def dk2():
    inst = dnichols(2)
    data = inst.cw_input()
    return inst, data, cw_modular_data(data)


def mat(rows, F):
    return [[F.coerce(x) if not isinstance(x, Fraction) else F.from_fraction(x) for x in r] for r in rows]


def test_uqsl2_3_s_matrix(u3):
    inst, _, B = u3
    F = inst.H.F
    r3 = sqrt_integer(3, F.N).inverse()
    expected = [[r3, r3], [r3 * 2, -r3]]
    assert B.S_CW == expected
    assert B.S_CW_cartan == expected


def test_uqsl2_3_t_matrix_is_golden(u3):
    inst, _, B = u3
    assert B.T_CW == inst.golden["T_CW"]


def test_dk2_modular_data(dk2):
    inst, _, B = dk2
    F = inst.H.F
    S = mat([[0, Fraction(-1, 4), Fraction(1, 4)], [-2, Fraction(-1, 2), Fraction(-1, 2)],
             [2, Fraction(-1, 2), Fraction(-1, 2)]], F)
    assert B.S_CW == S and B.S_CW_cartan == S
    assert B.T_CW == mat([[1, 0, 0], [0, 1, 0], [0, 0, -1]], F)


def _numeric_kappa(B):
    """(S T)^3 = kappa S^2 recomputed in floating point from the decimal expansions."""
    def m(M):
        return mpmath.matrix([[mpmath.mpc(*approx(x)) for x in r] for r in M])
    S, T = m(B.S_LM), m(B.T_LM)
    lhs = (S * T) ** 3
    rhs = S * S
    i, j = max(((i, j) for i in range(rhs.rows) for j in range(rhs.cols)), key=lambda p: abs(rhs[p]))
    return complex(lhs[i, j] / rhs[i, j])


def test_kappa_values(u3, dk2):
    for (inst, _, B), expected in ((u3, field(24).zeta(6)), (dk2, -dk2[0].H.F.one)):
        assert B.kappa == inst.H.F.coerce(expected)
        assert abs(_numeric_kappa(B) - complex(*approx(B.kappa))) < 1e-9


def test_lm_identities_on_center(u3, dk2):
    for _, _, B in (u3, dk2):
        assert B.identities.ok


def test_verlinde(u3, dk2):
    for inst, data, B in (u3, dk2):
        rep = verlinde_check(B, data)
        assert rep.ok
        F = inst.H.F
        for name, d in inst.golden["diagonalized"].items():
            assert rep.diagonal[name] == [F.from_int(x) for x in d]


def test_mixed_fusion_coefficient_grows_with_n():
    coeff = [mixed_fusion_matrices(dnichols(n).cw_input(require_ribbon=False))["V_K"][1][0]
             for n in (1, 2)]
    assert [c.to_fraction() for c in coeff] == [2, 8]


def test_dk2_s_lm_closed_form(dk2):
    # S_LM(K^a Kb^b wb_1 w_2) = (-1)^s g(w1^c) g(w2) / 2 * w1^c (1 + (-1)^b K + (-1)^a Kb
    #   + (-1)^(a+b) K Kb) wb_2^c, s = floor(|w1^c|/2) + floor(|w2^c|/2) + (a+b)|w1|
    inst, _, _ = dk2
    H, F, n = inst.H, inst.H.F, 2
    full = (1 << n) - 1
    lm = LMMaps(H, inst.ribbon.R.v, inst.integrals.lam.v, inst.ribbon.v.v)

    def w(S, bar=False):
        return {dk_index(n, 0, 0, 0, S) if bar else dk_index(n, 0, 0, S, 0): F.one}

    def gamma(S):
        (k, c), = vclean(H.mul(w(S), w(full ^ S))).items()
        assert k == dk_index(n, 0, 0, full, 0)
        return c

    for a in (0, 1):
        for b in (0, 1):
            mid = {dk_index(n, x, y, 0, 0): F.from_int((-1) ** (x * b + y * a)) for x in (0, 1) for y in (0, 1)}
            for S1 in range(1 << n):
                for S2 in range(1 << n):
                    x = H.mul_many({dk_index(n, a, b, 0, 0): F.one}, w(S1, True), w(S2))
                    c1, c2 = full ^ S1, full ^ S2
                    s = popcount(c1) // 2 + popcount(c2) // 2 + (a + b) * popcount(S1)
                    coef = F.from_fraction(Fraction((-1) ** s, 2)) * gamma(c1) * gamma(S2)
                    expected = {k: v * coef for k, v in H.mul_many(w(c1), mid, w(c2, True)).items()}
                    assert vclean(lm.S(x)) == vclean(expected)


def test_t_lm_is_multiplication_by_v(dk2):
    inst, _, _ = dk2
    H = inst.H
    lm = LMMaps(H, inst.ribbon.R.v, inst.integrals.lam.v, inst.ribbon.v.v)
    x = {dk_index(2, 1, 0, 1, 2): H.F.one}
    assert lm.T(x) == H.mul(inst.ribbon.v.v, x)


def test_kerler_blocks_l3():
    rep = kerler_blocks(uqsl2(3))
    assert rep.ok
    assert rep.off_blocks_zero and rep.S_higman_ok and rep.S_semi_ok and rep.S_nu_is_phi


def test_kerler_blocks_l5():
    rep = kerler_blocks(uqsl2(5))
    assert rep.ok and rep.basis_rank == 7


def test_cyclotomic_containment(u3, dk2):
    _, _, B = u3
    assert cyclotomic_containment(B.S_CW) == 12
    assert cyclotomic_containment(B.T_CW) == 3
    assert cyclotomic_containment(dk2[2].S_CW) == 1
    assert minimal_conductor(field(40).zeta(8)) == 5


def test_equivalence_recovers_a_conjugation(u3):
    _, _, B = u3
    F = B.H.F
    X = mat([[1, 2], [1, 3]], F)
    Xi = linalg.inverse(X, F)
    S2 = linalg.matmul(Xi, linalg.matmul(B.S_CW, X, F), F)
    T2 = linalg.matscale(linalg.matmul(Xi, linalg.matmul(B.T_CW, X, F), F), F.zeta(8))
    eq = sl2z_equivalence(B.S_CW, B.T_CW, S2, T2)
    assert eq.found
    # X T1 = beta T2 X with T2 = zeta X^-1 T1 X
    assert eq.beta == F.zeta(8).inverse()
    Y = eq.X
    assert linalg.mat_equal(linalg.matmul(Y, B.T_CW, F), linalg.matscale(linalg.matmul(T2, Y, F), eq.beta))
    assert linalg.mat_equal(linalg.matmul(Y, B.S_CW, F), linalg.matscale(linalg.matmul(S2, Y, F), eq.alpha))


def test_inequivalent_pairs_are_rejected():
    F = field(8)
    I2 = linalg.identity(2, F)
    N1S = mat([[Fraction(-1, 2), Fraction(3, 2)], [Fraction(1, 2), Fraction(1, 2)]], F)
    N1T = mat([[1, 0], [0, -1]], F)
    assert not sl2z_equivalence(N1S, N1T, I2, I2).found


def test_restrict_rejects_non_invariant_subspace(dk2):
    inst, _, _ = dk2
    H = inst.H
    lm = LMMaps(H, inst.ribbon.R.v, inst.integrals.lam.v, inst.ribbon.v.v)
    with pytest.raises(StructuralError):
        restrict(lm.T, [{dk_index(2, 0, 0, 1, 0): H.F.one}], H.F)


def test_identities_detect_wrong_t():
    F = field(8)
    S = mat([[0, -1], [1, 0]], F)
    T = mat([[1, 1], [0, 1]], F)
    assert verify_modular_identities(S, T, F).st_cubed_ok
    assert not verify_modular_identities(S, mat([[1, 2], [0, 1]], F), F).st_cubed_ok
