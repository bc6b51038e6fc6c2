"""Family constructors: U_q sl(2), the Nichols algebras K_n and their doubles DK_n."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction
from functools import lru_cache

from ..center import IntegralPair, StructuralError, normalize_pair
from ..hopf import AlgElem, DualElem, HopfAlgebra, vclean
from ..repnlib import CharacterTable, ModuleRep
from ..ribbon import RibbonData, TensorElem
from .golden import dnichols_golden, nichols_golden, uqsl2_golden
from .nichols_alg import (dk_index, dk_r_matrix, dk_ribbon_element, dnichols_algebra,
                          kn_index, kn_r_matrix, kn_ribbon_element, nichols_algebra)
from .nichols_mod import dk_idempotents, dk_modules, kn_idempotents, kn_modules
from .uqsl2_alg import pbw_index, uqsl2_algebra, uqsl2_r_matrix, uqsl2_ribbon_element
from .uqsl2_center import canonical_center, closed_form_integrals
from .uqsl2_mod import projective_module, simple_module


@dataclass
class FamilyInstance:
    """Everything the pipelines need for one algebra.

    ``idempotents`` follow the order of ``table.projectives``; ``higman_index``
    picks the independent projective classes in the Higman ordering and
    ``class_weights`` the per-class rescaling of the two Higman bases.
    ``ribbon_inverse`` marks ribbon elements checked in the inverse convention.
    """

    family: str
    param: int
    algebra: HopfAlgebra
    ribbon: RibbonData | None
    integrals: IntegralPair | None
    idempotents: list
    modules: dict
    table: CharacterTable
    higman_index: list = dfield(default_factory=list)
    class_weights: list = dfield(default_factory=list)
    canonical_center: object = None
    golden: dict = dfield(default_factory=dict)
    ribbon_inverse: bool = False
    factorizable_expected: bool = True

    @property
    def name(self) -> str:
        return f"{self.family}({self.param})"

    @property
    def H(self) -> HopfAlgebra:
        return self.algebra

    def check_orthogonal(self) -> bool:
        H = self.algebra
        es = [_raw(e) for e in self.idempotents]
        for i, a in enumerate(es):
            for j, b in enumerate(es):
                p = vclean(H.mul(a, b))
                if p != (a if i == j else {}):
                    return False
        return True

    def cw_input(self, require_ribbon: bool = True):
        """Pipeline input; with ``require_ribbon=False`` v may be None (enough for mixed fusion)."""
        from ..modular import CWInput

        if self.ribbon is None or self.integrals is None or (require_ribbon and self.ribbon.v is None):
            raise StructuralError(f"{self.name} carries no ribbon data")
        v = self.ribbon.v.v if self.ribbon.v is not None else None
        return CWInput(self.algebra, self.ribbon.R.v, self.ribbon.G.v, self.integrals.Lambda.v,
                       self.integrals.lam.v, v, self.table, self.idempotents,
                       self.higman_index, self.class_weights)

    def to_json(self) -> dict:
        out = {"family": self.family, "param": self.param, "algebra": self.algebra.to_json()}
        if self.ribbon is not None:
            out["ribbon"] = self.ribbon.to_json()
        if self.integrals is not None:
            out["integrals"] = self.integrals.to_json()
        return out


def _raw(x):
    return x.v if isinstance(x, (AlgElem, DualElem, TensorElem)) else x


def _ribbon(H: HopfAlgebra, R: dict, v: dict | None, G: dict) -> RibbonData:
    return RibbonData(H, TensorElem(H, R, 2), AlgElem(H, vclean(v)) if v is not None else None,
                      AlgElem(H, G))


# -- U_q sl(2) --------------------------------------------------------------------------


def weight_idempotent(H: HopfAlgebra, exponent: int) -> dict:
    """Projection onto the K-eigenspace q^exponent: (1/l) sum_i q^(-exponent i) K^i."""
    l, qn, F = H.l, H.qnumbers, H.F
    inv_l = F.from_fraction(Fraction(1, l))
    return {pbw_index(l, 0, 0, i): qn.qpow(-exponent * i) * inv_l for i in range(l)}


def uqsl2_idempotents(H: HopfAlgebra, cc=None) -> dict[int, dict]:
    """e_r = P_j(C) 1_(q^(r-1)) with j = min(r, l - r) (j = 0 for r = l).

    The highest weight q^(r-1) of V_r is not a weight of V_(l-r), so H e_r is
    the projective cover of V_r; distinct r give orthogonal idempotents.
    """
    l = H.l
    cc = cc or canonical_center(H)
    out = {}
    for r in range(1, l + 1):
        j = 0 if r == l else min(r, l - r)
        out[r] = vclean(H.mul(cc.P[j], weight_idempotent(H, r - 1)))
    return out


@lru_cache(maxsize=None)
def uqsl2(l: int, conductor: int | None = None) -> FamilyInstance:
    if l < 3 or l % 2 == 0:
        raise ValueError("parameter must be odd and >= 3")
    H = uqsl2_algebra(l, conductor)
    F = H.F
    R = uqsl2_r_matrix(H)
    G = {pbw_index(l, 0, 0, 1): F.one}
    rib = _ribbon(H, R, uqsl2_ribbon_element(H), G)
    Lam, lam = closed_form_integrals(H)
    integrals = normalize_pair(AlgElem(H, Lam), DualElem(H, lam))
    simples = [simple_module(H, r) for r in range(1, l + 1)]
    proj = [projective_module(H, r) for r in range(1, l)] + [simples[-1]]
    modules = {M.name: M for M in simples + proj[:-1]}
    # the socle of P_r is V_r
    table = CharacterTable(H, simples, proj, [False] * (l - 1) + [True],
                           list(range(1, l + 1)))
    cc = canonical_center(H)
    e = uqsl2_idempotents(H, cc)
    h = (l - 1) // 2
    return FamilyInstance(
        "uqsl2", l, H, rib, integrals, [e[r] for r in range(1, l + 1)], modules, table,
        higman_index=[l - 1] + list(range(h)), class_weights=[1] + [2] * h,
        canonical_center=cc, golden=uqsl2_golden(l, F, H.qnumbers))


# -- K_n ----------------------------------------------------------------------------------


@lru_cache(maxsize=None)
def nichols(n: int) -> FamilyInstance:
    """K_n with its modules; R_(K_n) and the ribbon element are attached for even n."""
    if n < 1:
        raise ValueError("parameter must be >= 1")
    H = nichols_algebra(n)
    F = H.F
    K = kn_index(n, 1, 0)
    rib = None
    if n % 2 == 0:
        rib = _ribbon(H, kn_r_matrix(H, n // 2), kn_ribbon_element(H, n // 2), {K: F.one})
    mods = kn_modules(H, n)
    table = CharacterTable(H, [mods["V_eps"], mods["V_Kb"]], [mods["P_eps"], mods["P_Kb"]],
                           [False, False], [1, 1])
    e = kn_idempotents(H, n)
    return FamilyInstance("nichols", n, H, rib, None, [e["eps"], e["Kb"]], mods, table,
                          golden=nichols_golden(n), ribbon_inverse=True,
                          factorizable_expected=False)


# -- DK_n ---------------------------------------------------------------------------------


def dk_integrals(H: HopfAlgebra, n: int) -> tuple[dict, dict]:
    """Lambda = (1/2)(1 + K + Kb + K Kb) xi_1..xi_n xib_1..xib_n and lambda = 2 (top word)^*."""
    F = H.F
    full = (1 << n) - 1
    half = F.from_fraction(Fraction(1, 2))
    Lam = {dk_index(n, a, b, full, full): half for a in (0, 1) for b in (0, 1)}
    lam = {dk_index(n, 0, 0, full, full): F.from_int(2)}
    return Lam, lam


@lru_cache(maxsize=None)
def dnichols(n: int) -> FamilyInstance:
    """DK_n; the ribbon element is attached for even n only."""
    if n < 1:
        raise ValueError("parameter must be >= 1")
    H = dnichols_algebra(n)
    F = H.F
    R = dk_r_matrix(H, n)
    G = {dk_index(n, 1, 0, 0, 0): F.one}
    v = dk_ribbon_element(H, n) if n % 2 == 0 else None
    rib = _ribbon(H, R, v, G)
    Lam, lam = dk_integrals(H, n)
    integrals = normalize_pair(AlgElem(H, Lam), DualElem(H, lam))
    mods = dk_modules(H, n)
    table = CharacterTable(H, [mods["V_1"], mods["V_KKb"], mods["V_K"], mods["V_Kb"]],
                           [mods["P_1"], mods["P_KKb"], mods["V_K"], mods["V_Kb"]],
                           [False, False, True, True], [1, 1, 1 << n, 1 << n])
    e = dk_idempotents(H, n)
    return FamilyInstance(
        "dnichols", n, H, rib, integrals, [e["1"], e["KKb"], e["K"], e["Kb"]], mods, table,
        higman_index=[0, 2, 3], class_weights=[1, 1, 1], golden=dnichols_golden(n, F),
        ribbon_inverse=True)


def dk2_higman_elements(H: HopfAlgebra) -> list[dict]:
    """h_1 = 1 - K Kb, h_2 = (K + Kb) x1 x2 xb1 xb2, h_3 = (K - Kb)(1 - x1 xb1 - x2 xb2 - x1 x2 xb1 xb2) on DK_2."""
    F = H.F
    n = 2
    one, m1 = F.one, -F.one

    def el(*terms):
        return {dk_index(n, a, b, S, T): c for a, b, S, T, c in terms}

    top = el((0, 0, 3, 3, one))
    h1 = el((0, 0, 0, 0, one), (1, 1, 0, 0, m1))
    h2 = H.mul(el((1, 0, 0, 0, one), (0, 1, 0, 0, one)), top)
    rest = vclean({0: one} | {k: -v for x in (H.mul(el((0, 0, 1, 0, one)), el((0, 0, 0, 1, one))),
                                             H.mul(el((0, 0, 2, 0, one)), el((0, 0, 0, 2, one))), top)
                              for k, v in x.items()})
    h3 = H.mul(el((1, 0, 0, 0, one), (0, 1, 0, 0, m1)), rest)
    return [vclean(h1), vclean(h2), vclean(h3)]


def dk_ribbon_candidate(n: int) -> dict:
    """The even-n ribbon formula evaluated on DK_n for any n (fails for odd n)."""
    H = dnichols_algebra(n)
    return dk_ribbon_element(H, n)


FAMILIES = {"uqsl2": uqsl2, "nichols": nichols, "dnichols": dnichols}


def build(family: str, param: int) -> FamilyInstance:
    try:
        ctor = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return ctor(param)


__all__ = ["FamilyInstance", "uqsl2", "nichols", "dnichols", "build", "FAMILIES",
           "uqsl2_idempotents", "weight_idempotent", "dk_integrals", "dk_ribbon_candidate",
           "dk2_higman_elements"]
