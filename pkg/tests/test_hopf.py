"""Structure constants, axiom verification and the Drinfeld double."""

import json

from hopfmod.families import dnichols, nichols, uqsl2
from hopfmod.families.nichols_alg import kn_index, popcount
from hopfmod.hopf import HopfAlgebra, drinfeld_double, verify_hopf_axioms, vclean
from hopfmod.ribbon import implements_s2, is_factorizable, verify_quasitriangular


def b(H, label):
    return {H.index(label): H.F.one}


def test_sweedler_relations():
    H = nichols(1).H
    K, x = b(H, "K"), b(H, "x1")
    assert H.dim == 4
    assert H.mul(K, K) == H.unit
    assert vclean(H.mul(x, x)) == {}
    assert vclean(H.mul(K, x)) == {k: -c for k, c in H.mul(x, K).items()}


def test_axioms_pass_on_small_instances():
    for inst in (nichols(1), nichols(2), nichols(3), dnichols(1), uqsl2(3)):
        rep = verify_hopf_axioms(inst.H, mode="full")
        assert rep.ok, (inst.name, rep.failures())


def test_generated_mode_agrees_with_full_mode():
    H = dnichols(1).H
    assert verify_hopf_axioms(H, mode="generated").ok
    assert verify_hopf_axioms(H, mode="full").ok


def test_broken_antipode_is_caught_with_witness():
    obj = nichols(1).H.to_json()
    # S(x1) = -K x1 in K_1; flip its sign
    x1 = obj["labels"].index("x1")
    obj["antipode"] = [[i, j, {**c, "coeffs": [[-a, d] for a, d in c["coeffs"]]}] if i == x1 else [i, j, c]
                       for i, j, c in obj["antipode"]]
    bad = HopfAlgebra.from_json(obj)
    rep = verify_hopf_axioms(bad, mode="full")
    assert not rep.ok
    name = rep.failures()[0]
    assert "antipode" in name
    assert rep.entries[name]["witness"] is not None


def test_antipode_on_words_of_k2():
    # S(w) = (-K)^{|w|} w
    H = nichols(2).H
    F = H.F
    for S in range(4):
        w = {kn_index(2, 0, S): F.one}
        k = popcount(S)
        sign = F.from_int((-1) ** k)
        expected = {kn_index(2, k % 2, S): sign}
        assert vclean(H.S(w)) == expected


def test_uqsl2_truncations():
    H = uqsl2(3).H
    E, Fg, K = b(H, "E"), b(H, "F"), b(H, "K")
    assert H.dim == 27
    assert vclean(H.power(E, 3)) == {} and vclean(H.power(Fg, 3)) == {}
    assert H.power(K, 3) == H.unit
    assert H.comul(K) == H.tensor(K, K)


def test_square_of_antipode_is_conjugation_by_k():
    assert implements_s2(uqsl2(3).H, b(uqsl2(3).H, "K"))
    assert implements_s2(dnichols(1).H, b(dnichols(1).H, "K"))


def test_double_of_sweedler_is_factorizable():
    D, R = drinfeld_double(nichols(1).H)
    assert D.dim == 16
    assert verify_hopf_axioms(D, mode="full").ok
    assert verify_quasitriangular(D, R).ok
    assert is_factorizable(D, R) == (True, 16)


def test_json_roundtrip_preserves_structure():
    H = dnichols(1).H
    text = H.dumps()
    H2 = HopfAlgebra.from_json(json.loads(text))
    assert H2.dumps() == text
    assert verify_hopf_axioms(H2, mode="full").ok
