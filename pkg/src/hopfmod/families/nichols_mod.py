"""Simple and projective modules of K_n and DK_n."""

from __future__ import annotations

from fractions import Fraction

from ..cyclo import sqrt_integer
from ..hopf import HopfAlgebra
from ..repnlib import ModuleRep, left_ideal_module, one_dim_module, s_kron, s_from_dense
from .nichols_alg import dk_index, kn_index


def _half(H: HopfAlgebra):
    return H.F.from_fraction(Fraction(1, 2))


def _quarter(H: HopfAlgebra):
    return H.F.from_fraction(Fraction(1, 4))


# -- K_n -------------------------------------------------------------------


def kn_idempotents(H: HopfAlgebra, n: int) -> dict:
    """(1 + K)/2 and (1 - K)/2."""
    K = kn_index(n, 1, 0)
    h = _half(H)
    return {"eps": {0: h, K: h}, "Kb": {0: h, K: -h}}


def kn_modules(H: HopfAlgebra, n: int) -> dict[str, ModuleRep]:
    K = kn_index(n, 1, 0)
    xs = [kn_index(n, 0, 1 << i) for i in range(n)]
    triv = {K: 1, **{x: 0 for x in xs}}
    sign = {K: -1, **{x: 0 for x in xs}}
    e = kn_idempotents(H, n)
    return {
        "V_eps": one_dim_module(H, triv, "V_eps"),
        "V_Kb": one_dim_module(H, sign, "V_Kb"),
        "P_eps": left_ideal_module(H, e["eps"], "P_eps"),
        "P_Kb": left_ideal_module(H, e["Kb"], "P_Kb"),
    }


# -- DK_n ------------------------------------------------------------------


def _tensor_power(mats: list, F) -> list:
    out = s_from_dense([[F.one]], F)
    dim = 1
    for m in mats:
        out = s_kron(out, m, len(m))
        dim *= len(m)
    return out


def dk_idempotents(H: HopfAlgebra, n: int) -> dict:
    """Primitive idempotents for the four projective classes.

    e_1 and e_KKb are the group-like projections; e_K and e_Kb carry the
    normalization (-1)^floor(n/2) / 2^(n+2) in front of the top word.
    """
    F = H.F
    q = _quarter(H)
    g = {(a, b): dk_index(n, a, b, 0, 0) for a in (0, 1) for b in (0, 1)}
    full = (1 << n) - 1
    e1 = {g[0, 0]: q, g[1, 0]: q, g[0, 1]: q, g[1, 1]: q}
    ekk = {g[0, 0]: q, g[1, 0]: -q, g[0, 1]: -q, g[1, 1]: q}
    c = F.from_fraction(Fraction(-1 if (n // 2) % 2 else 1, 1 << (n + 2)))
    top = {dk_index(n, 0, 0, full, full): F.one}
    eK = H.mul({g[0, 0]: c, g[1, 0]: c, g[0, 1]: -c, g[1, 1]: -c}, top)
    eKb = H.mul({g[0, 0]: c, g[1, 0]: -c, g[0, 1]: c, g[1, 1]: -c}, top)
    return {"1": e1, "KKb": ekk, "K": eK, "Kb": eKb}


def dk_simple_k(H: HopfAlgebra, n: int, bar: bool = False) -> ModuleRep:
    """V_K (or V_Kb with ``bar``) on (C^2)^(x n): xi_i, xib_i act by Xi and its transpose."""
    F = H.F
    r2 = sqrt_integer(2, F.N)
    sz = s_from_dense([[F.one, F.zero], [F.zero, -F.one]], F)
    ident = s_from_dense([[F.one, F.zero], [F.zero, F.one]], F)
    xi = s_from_dense([[F.zero, r2], [F.zero, F.zero]], F)
    xit = s_from_dense([[F.zero, F.zero], [r2, F.zero]], F)
    Z = _tensor_power([sz] * n, F)
    negZ = [{k: -v for k, v in row.items()} for row in Z]
    acts = {}
    K = dk_index(n, 1, 0, 0, 0)
    Kb = dk_index(n, 0, 1, 0, 0)
    acts[K], acts[Kb] = (negZ, Z) if bar else (Z, negZ)
    for i in range(n):
        left = [sz] * i
        right = [ident] * (n - i - 1)
        acts[dk_index(n, 0, 0, 1 << i, 0)] = _tensor_power(left + [xi] + right, F)
        acts[dk_index(n, 0, 0, 0, 1 << i)] = _tensor_power(left + [xit] + right, F)
    name = "V_Kb" if bar else "V_K"
    return ModuleRep(H, name, 1 << n, acts)


def dk_modules(H: HopfAlgebra, n: int) -> dict[str, ModuleRep]:
    K = dk_index(n, 1, 0, 0, 0)
    Kb = dk_index(n, 0, 1, 0, 0)
    nil = {dk_index(n, 0, 0, 1 << i, 0): 0 for i in range(n)}
    nil.update({dk_index(n, 0, 0, 0, 1 << i): 0 for i in range(n)})
    e = dk_idempotents(H, n)
    return {
        "V_1": one_dim_module(H, {K: 1, Kb: 1, **nil}, "V_1"),
        "V_KKb": one_dim_module(H, {K: -1, Kb: -1, **nil}, "V_KKb"),
        "V_K": dk_simple_k(H, n),
        "V_Kb": dk_simple_k(H, n, bar=True),
        "P_1": left_ideal_module(H, e["1"], "P_1"),
        "P_KKb": left_ideal_module(H, e["KKb"], "P_KKb"),
    }
