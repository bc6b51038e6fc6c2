"""Lyubashenko-Majid SL(2,Z) action on the center, the Higman ideal bases
B_chi and B_tau, Cohen-Westreich (S, T), mixed fusion, Verlinde checks and
projective SL(2,Z) equivalence search."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from math import gcd

from . import linalg
from .center import (StructuralError, TraceMap, _raw, frobenius_map, group_inverse,
                     radford_map)
from .cyclo import Cyc, CyclotomicField, embed, field
from .hopf import HopfAlgebra, dual_product, vclean
from .repnlib import character
from .ribbon import drinfeld_map, drinfeld_matrix, invert_element, r_inverse, shift_functional

Matrix = list


# -- Lyubashenko-Majid maps ------------------------------------------------------------


class LMMaps:
    """S and T of the Lyubashenko-Majid action as maps H -> H.

    minus: S(x) = (id (x) lambda)(R^-1 (1 (x) x) R21^-1)
    plus:  S(x) = (id (x) lambda)(R21 (1 (x) x) R) = f_Q(Psi(x))
    T(x) = v x in both versions.

    ``lam`` is the cointegral used by the Frobenius map Psi(a)(b) = lam(S(a) b);
    the explicit formulas above pair with lam o S, so that S_plus = f_Q o Psi.
    """

    def __init__(self, H: HopfAlgebra, R, lam, v, sign: str = "minus"):
        if sign not in ("minus", "plus"):
            raise ValueError("sign must be 'minus' or 'plus'")
        self.H = H
        self.sign = sign
        R = _raw(R)
        if sign == "minus":
            left = r_inverse(H, R)
            right = H.flip(left)
        else:
            left = H.flip(R)
            right = R
        self.left = [(a, b, c) for (a, b), c in left.items()]
        self.right = [(a, b, c) for (a, b), c in right.items()]
        self.lam = compose_antipode(H, _raw(lam))
        self.v = vclean(dict(_raw(v))) if v is not None else None

    def _lam(self, x: dict) -> Cyc:
        s = self.H.F.zero
        for k, c in x.items():
            f = self.lam.get(k)
            if f:
                s = s + f * c
        return s

    def S(self, x) -> dict:
        H = self.H
        x = _raw(x)
        # sum_ij lambda(b_i x c_j) a_i d_j with left = sum a_i (x) b_i, right = sum d_j (x) c_j
        inner: dict[int, dict] = {}
        for a, b, c in self.left:
            bx = H.mul({b: c}, x)
            if bx:
                acc = inner.setdefault(a, {})
                for k, y in bx.items():
                    o = acc.get(k)
                    acc[k] = y if o is None else o + y
        out: dict = {}
        for a, bx in inner.items():
            bx = vclean(bx)
            if not bx:
                continue
            for d, cj, c in self.right:
                s = self._lam(H.mul(bx, {cj: c}))
                if s:
                    for k, y in H.mul({a: s}, {d: H.F.one}).items():
                        o = out.get(k)
                        out[k] = y if o is None else o + y
        return vclean(out)

    def T(self, x) -> dict:
        return vclean(self.H.mul(self.v, _raw(x)))


def compose_antipode(H: HopfAlgebra, lam: dict) -> dict:
    """lam o S as a functional."""
    out = {}
    for b in range(H.dim):
        s = H.F.zero
        for k, c in H.S({b: H.F.one}).items():
            f = lam.get(k)
            if f:
                s = s + f * c
        if s:
            out[b] = s
    return out


def lm_maps(H: HopfAlgebra, R, lam, v, sign: str = "minus") -> LMMaps:
    return LMMaps(H, R, lam, v, sign)


def restrict(endo, basis: list, F: CyclotomicField) -> Matrix:
    """Matrix (column j = coordinates of endo(b_j)) of an endomorphism preserving span(basis)."""
    basis = [_raw(b) for b in basis]
    cols = []
    for j, b in enumerate(basis):
        co = linalg.coordinates(vclean(dict(_raw(endo(b)))), basis, F)
        if co is None:
            raise StructuralError(f"subspace not invariant: image of basis vector {j} leaves the span")
        cols.append(co)
    n = len(basis)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def antipode_inverse_matrix(H: HopfAlgebra, basis: list) -> Matrix:
    return restrict(lambda x: H.Sinv(x), basis, H.F)


@dataclass
class ModularIdentities:
    kappa: Cyc
    s_squared_is_sinv: bool
    st_cubed_ok: bool

    @property
    def ok(self) -> bool:
        return self.s_squared_is_sinv and self.st_cubed_ok


def verify_modular_identities(S: Matrix, T: Matrix, F: CyclotomicField,
                              Sinv_matrix: Matrix | None = None) -> ModularIdentities:
    """Return kappa with (S T)^3 = kappa S^2; also compare S^2 with the inverse antipode."""
    S2 = linalg.matmul(S, S, F)
    ST = linalg.matmul(S, T, F)
    ST3 = linalg.matpow(ST, 3, F)
    kappa = linalg.is_scalar_multiple(ST3, S2)
    s2ok = True if Sinv_matrix is None else linalg.mat_equal(S2, Sinv_matrix)
    return ModularIdentities(kappa if kappa is not None else F.zero, s2ok, kappa is not None)


# -- shifted maps ---------------------------------------------------------------------


def shifted_drinfeld(H: HopfAlgebra, Q: dict, G, chi) -> dict:
    """f^_Q(chi) = f_Q(chi <- G^-1), i.e. (chi(G^-1 .) (x) id)(R21 R)."""
    return drinfeld_map(H, None, shift_functional(H, _raw(chi), group_inverse(H, G)), Q).v


def shifted_frobenius(H: HopfAlgebra, lam, G, a) -> dict:
    """Psi^(a) = Psi(G^-1 a)."""
    return frobenius_map(H, lam, H.mul(group_inverse(H, G), _raw(a))).v


def pair(f: dict, x: dict, F: CyclotomicField) -> Cyc:
    s = F.zero
    for k, c in x.items():
        y = f.get(k)
        if y:
            s = s + y * c
    return s


# -- Cohen-Westreich data ---------------------------------------------------------------


@dataclass
class CWInput:
    """Family data indexing the Higman ideal.

    ``index`` lists positions (into the character table) of the independent
    projective classes in the pinned order; ``weights`` rescales each class
    (B_chi and B_tau entries are divided by the weight).
    """

    H: HopfAlgebra
    R: dict
    G: dict
    Lam: dict
    lam: dict
    v: dict
    table: object
    idempotents: list
    index: list
    weights: list


def cw_bases(data: CWInput, Q: dict | None = None) -> tuple[list[dict], list[dict]]:
    H, F = data.H, data.H.F
    Q = Q if Q is not None else drinfeld_matrix(H, data.R).v
    tau = TraceMap(H, data.G, data.Lam)
    Bchi, Btau = [], []
    for j, w in zip(data.index, data.weights):
        winv = F.coerce(w).inverse()
        p = character(data.table.projectives[j]).v
        Bchi.append(vclean({k: c * winv for k, c in shifted_drinfeld(H, Q, data.G, p).items()}))
        Btau.append(vclean({k: c * winv for k, c in tau(data.idempotents[j]).v.items()}))
    n = len(Bchi)
    if linalg.rank(Bchi, H.dim, F) != n or linalg.rank(Btau, H.dim, F) != n:
        raise StructuralError("B_chi or B_tau is not linearly independent")
    if linalg.rank(Bchi + Btau, H.dim, F) != n:
        raise StructuralError("B_chi and B_tau span different subspaces")
    return Bchi, Btau


def change_of_basis(B_from: list[dict], B_to: list[dict], F: CyclotomicField) -> Matrix:
    """M with B_to[j] = sum_k M[k][j] B_from[k]."""
    cols = [linalg.coordinates(b, B_from, F) for b in B_to]
    if any(c is None for c in cols):
        raise StructuralError("bases span different subspaces")
    n = len(B_from)
    return [[cols[j][k] for j in range(n)] for k in range(n)]


def pre_s_matrices(data: CWInput, Q: dict | None = None) -> tuple[Matrix, Matrix]:
    """s~_ij = <f^_Q(chi_i), chi_j> and s^_ij = <f^_Q(chi_i), Psi^ S(e_j)> over all simples."""
    H, F = data.H, data.H.F
    Q = Q if Q is not None else drinfeld_matrix(H, data.R).v
    chis = [character(V).v for V in data.table.simples]
    fch = [shifted_drinfeld(H, Q, data.G, c) for c in chis]
    psis = [shifted_frobenius(H, data.lam, data.G, H.S(_raw(e))) for e in data.idempotents]
    r = len(chis)
    st = [[pair(chis[j], fch[i], F) for j in range(r)] for i in range(r)]
    sh = [[pair(psis[j], fch[i], F) for j in range(r)] for i in range(r)]
    return st, sh


def cartan_route(data: CWInput, C: list[list[int]], s_hat: Matrix) -> Matrix:
    """S_CW = C_n^-1 (C S^)_n on the independent index set, in the weighted bases."""
    F = data.H.F
    r = len(C)
    Cm = [[F.from_int(x) for x in row] for row in C]
    CS = linalg.matmul(Cm, s_hat, F)
    idx = data.index
    Cn = [[Cm[i][j] for j in idx] for i in idx]
    CSn = [[CS[i][j] for j in idx] for i in idx]
    S = linalg.matmul(linalg.inverse(Cn, F), CSn, F)
    return _reweight(S, data.weights, F)


def _reweight(S: Matrix, weights: list, F: CyclotomicField) -> Matrix:
    """W S W^-1 for W = diag(weights): the matrix in bases divided by the weights."""
    n = len(S)
    w = [F.coerce(x) for x in weights]
    return [[S[i][j] * w[i] / w[j] for j in range(n)] for i in range(n)]


def mixed_fusion_matrices(data: CWInput) -> dict[str, Matrix]:
    """N^i with chi_i p_j = sum_k N^i_kj p_k over the weighted projective classes."""
    H, F = data.H, data.H.F
    proj = [character(data.table.projectives[j]).v for j in data.index]
    out = {}
    for V in data.table.simples:
        chi = character(V).v
        cols = []
        for p in proj:
            co = linalg.coordinates(vclean(dual_product(H, chi, p)), proj, F)
            if co is None:
                raise StructuralError(f"chi_{V.name} p is not a combination of projective characters")
            cols.append(co)
        n = len(proj)
        N = [[cols[j][k] for j in range(n)] for k in range(n)]
        out[V.name] = _reweight(N, data.weights, F)
    return out


@dataclass
class ModularBundle:
    H: HopfAlgebra
    center: list
    higman: list
    S_LM: Matrix
    T_LM: Matrix
    kappa: Cyc
    B_chi: list
    B_tau: list
    S_CW: Matrix
    S_CW_cartan: Matrix
    T_CW: Matrix
    T_phase: Cyc
    fusion: dict
    s_tilde: Matrix
    s_hat: Matrix
    cartan: list
    index_names: list
    socle_dims: list
    identities: ModularIdentities | None = None
    extras: dict = dfield(default_factory=dict)

    def to_json(self, digits: int = 12) -> dict:
        from .cyclo import approx_str

        def mat(M):
            return {"exact": [[x.to_json() for x in row] for row in M],
                    "approx": [[list(approx_str(x, digits)) for x in row] for row in M]}

        return {
            "schema": 1,
            "index": self.index_names,
            "S_CW": mat(self.S_CW),
            "T_CW": mat(self.T_CW),
            "T_phase": self.T_phase.to_json(),
            "kappa": self.kappa.to_json(),
            "ord_T_CW": matrix_order(self.T_CW, self.H.F),
            "cartan": self.cartan,
            "fusion": {k: mat(v) for k, v in self.fusion.items()},
            "s_tilde": mat(self.s_tilde),
            "center_dim": len(self.center),
            "higman_dim": len(self.higman),
        }


def cw_modular_data(data: CWInput, center: list | None = None, lm: LMMaps | None = None,
                    Q: dict | None = None) -> ModularBundle:
    """Assemble S_LM/T_LM on the center and the Cohen-Westreich data on the Higman ideal."""
    from .center import center_basis, higman_ideal
    from .repnlib import cartan_matrix

    H, F = data.H, data.H.F
    Q = Q if Q is not None else drinfeld_matrix(H, data.R).v
    Z = [_raw(z) for z in (center or center_basis(H).elements)]
    lm = lm or LMMaps(H, data.R, data.lam, data.v, "minus")
    S_LM = restrict(lm.S, Z, F)
    T_LM = restrict(lm.T, Z, F)
    ident = verify_modular_identities(S_LM, T_LM, F, antipode_inverse_matrix(H, Z))
    Bchi, Btau = cw_bases(data, Q)
    hig = [e.v for e in higman_ideal(H, data.G, data.Lam)]
    if linalg.rank(hig + Bchi, H.dim, F) != len(hig) or len(hig) != len(Bchi):
        raise StructuralError("B_chi does not span the Higman ideal")
    S_CW = change_of_basis(Bchi, Btau, F)
    C = cartan_matrix(data.table)
    st, sh = pre_s_matrices(data, Q)
    S_alt = cartan_route(data, C, sh)
    # T on the Higman ideal through the center form S^-1 v^-1 S, read in the B_chi basis
    vinv = invert_element(H, data.v)
    S_h = restrict(lm.S, Bchi, F)
    Vinv = restrict(lambda x: H.mul(vinv, _raw(x)), Bchi, F)
    T_raw = linalg.matmul(linalg.inverse(S_h, F), linalg.matmul(Vinv, S_h, F), F)
    steinberg = [k for k, j in enumerate(data.index) if data.table.steinberg[j]]
    pos = steinberg[0] if steinberg else 0
    phase = T_raw[pos][pos]
    T_CW = linalg.matscale(T_raw, phase.inverse())
    fusion = mixed_fusion_matrices(data)
    names = [data.table.projectives[j].name for j in data.index]
    socle = [data.table.socle_dims[j] for j in data.index]
    return ModularBundle(H, Z, hig, S_LM, T_LM, ident.kappa, Bchi, Btau, S_CW, S_alt, T_CW,
                         phase, fusion, st, sh, C, names, socle, ident)


# -- Verlinde ---------------------------------------------------------------------------


@dataclass
class VerlindeReport:
    diagonal: dict
    expected: dict
    entrywise: dict

    @property
    def ok(self) -> bool:
        return all(self.entrywise.values()) and all(
            self.diagonal[k] is not None and self.diagonal[k] == self.expected[k] for k in self.diagonal)


def verlinde_check(bundle: ModularBundle, data: CWInput) -> VerlindeReport:
    """S N^i S^-1 = diag(d_l^-1 s~_il) and N^i_jk = sum_l f_jl s~_il s_lk / d_l."""
    F = bundle.H.F
    S = bundle.S_CW
    Sinv = linalg.inverse(S, F)
    n = len(S)
    diag, exp, entry = {}, {}, {}
    for i, V in enumerate(data.table.simples):
        N = bundle.fusion[V.name]
        D = linalg.matmul(linalg.matmul(S, N, F), Sinv, F)
        diag[V.name] = [D[k][k] for k in range(n)] if linalg.is_diagonal(D) else None
        # the simple heading the projective class at index position l
        e = [bundle.s_tilde[i][data.index[l]] / F.from_int(bundle.socle_dims[l]) for l in range(n)]
        exp[V.name] = e
        ok = True
        for j in range(n):
            for k in range(n):
                s = F.zero
                for l in range(n):
                    s = s + Sinv[j][l] * e[l] * S[l][k]
                if s != N[j][k]:
                    ok = False
        entry[V.name] = ok
    return VerlindeReport(diag, exp, entry)


# -- SL(2,Z) equivalence ------------------------------------------------------------------


def common_field(*mats: Matrix) -> CyclotomicField:
    N = 1
    for M in mats:
        for row in M:
            for x in row:
                n = x.F.N
                N = N * n // gcd(N, n)
    return field(N)


def lift(M: Matrix, F: CyclotomicField) -> Matrix:
    return [[embed(x, F.N) if x.F.N != F.N else x for x in row] for row in M]


def root_of_unity_eigenvalues(T: Matrix, F: CyclotomicField) -> list[Cyc]:
    """Eigenvalues of T among the roots of unity of the working field."""
    N = F.N if F.N % 2 == 0 else 2 * F.N
    if N != F.N:
        F = field(N)
        T = lift(T, F)
    n = len(T)
    out = []
    for k in range(N):
        mu = F.zeta(k)
        A = [[T[i][j] - (mu if i == j else F.zero) for j in range(n)] for i in range(n)]
        if linalg.matrank(A, F) < n:
            out.append(mu)
    return out


def matrix_order(T: Matrix, F: CyclotomicField, bound: int = 10000) -> int | None:
    n = len(T)
    I = linalg.identity(n, F)
    P = T
    for k in range(1, bound + 1):
        if linalg.mat_equal(P, I):
            return k
        P = linalg.matmul(P, T, F)
    return None


@dataclass
class Equivalence:
    """X S1 = alpha S2 X and X T1 = beta T2 X with X invertible."""

    found: bool
    X: Matrix | None = None
    alpha: Cyc | None = None
    beta: Cyc | None = None
    tried: int = 0

    def to_json(self) -> dict:
        out = {"found": self.found, "candidates_tried": self.tried}
        if self.found:
            out["alpha"] = self.alpha.to_json()
            out["beta"] = self.beta.to_json()
            out["intertwiner"] = [[x.to_json() for x in row] for row in self.X]
        return out


def _kappa(S: Matrix, T: Matrix, F) -> Cyc | None:
    ST = linalg.matmul(S, T, F)
    return linalg.is_scalar_multiple(linalg.matpow(ST, 3, F), linalg.matmul(S, S, F))


def sl2z_equivalence(S1: Matrix, T1: Matrix, S2: Matrix, T2: Matrix) -> Equivalence:
    """Search X invertible with X S1 = alpha S2 X and X T1 = beta T2 X.

    beta runs over ratios of root-of-unity eigenvalues of T1 and T2; alpha is
    then forced by kappa1 = alpha beta^3 kappa2.
    """
    n = len(S1)
    if n != len(S2):
        return Equivalence(False)
    F = common_field(S1, T1, S2, T2)
    if F.N % 2:
        F = field(2 * F.N)
    S1, T1, S2, T2 = (lift(M, F) for M in (S1, T1, S2, T2))
    k1, k2 = _kappa(S1, T1, F), _kappa(S2, T2, F)
    if k1 is None or k2 is None or not k2:
        return Equivalence(False)
    ev1 = root_of_unity_eigenvalues(T1, F)
    ev2 = root_of_unity_eigenvalues(T2, F)
    betas = []
    for a in ev1:
        for b in ev2:
            beta = a / b
            if beta not in betas:
                betas.append(beta)
    tried = 0
    for beta in betas:
        tried += 1
        alpha = k1 / (k2 * beta ** 3)
        X = _intertwiner(S1, T1, S2, T2, alpha, beta, F)
        if X is not None:
            return Equivalence(True, X, alpha, beta, tried)
    return Equivalence(False, tried=tried)


def _intertwiner(S1, T1, S2, T2, alpha, beta, F) -> Matrix | None:
    n = len(S1)
    rows = []
    # unknown X[p][q] at p*n + q
    for A1, A2, c in ((S1, S2, alpha), (T1, T2, beta)):
        for p in range(n):
            for q in range(n):
                row: dict = {}
                for k in range(n):
                    if A1[k][q]:
                        row[p * n + k] = row.get(p * n + k, F.zero) + A1[k][q]
                    if A2[p][k]:
                        row[k * n + q] = row.get(k * n + q, F.zero) - c * A2[p][k]
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    ns = linalg.nullspace(rows, n * n, F)
    if not ns:
        return None
    m = len(ns)
    for coeffs in _combination_schedule(m):
        v: dict = {}
        for c, x in zip(coeffs, ns):
            if not c:
                continue
            c = F.from_int(c)
            for k, y in x.items():
                v[k] = v.get(k, F.zero) + c * y
        X = [[v.get(p * n + q, F.zero) for q in range(n)] for p in range(n)]
        if linalg.matrank(X, F) == n:
            return X
    return None


def _combination_schedule(m: int, tries: int = 40, prime: int = 10007):
    """Fixed coefficient vectors: unit vectors, all ones, then (t^i mod prime) for t = 2, 3, ...

    Reducing mod a prime moves the points off the moment curve, on which a
    determinant can vanish identically even when the span holds invertible elements.
    """
    for i in range(m):
        yield [1 if j == i else 0 for j in range(m)]
    yield [1] * m
    for t in range(2, tries + 2):
        yield [pow(t, i + 1, prime) for i in range(m)]


# -- cyclotomic containment -----------------------------------------------------------


def minimal_conductor(a: Cyc) -> int:
    """Least divisor d of the working conductor with a in Q(zeta_d) (Galois fixed-field test)."""
    N = a.F.N
    units = [k for k in range(1, N) if gcd(k, N) == 1]
    for d in range(1, N + 1):
        if N % d:
            continue
        if all(a.galois(k) == a for k in units if k % d == 1 % d):
            return d
    return N


def cyclotomic_containment(M: Matrix) -> int:
    """Smallest N' with every entry in Q(zeta_N')."""
    N = 1
    for row in M:
        for x in row:
            d = minimal_conductor(x)
            N = N * d // gcd(N, d)
    return N


# -- Kerler block form --------------------------------------------------------------------


def block_matrix(M: Matrix, rows: range, cols: range) -> Matrix:
    return [[M[i][j] for j in cols] for i in rows]


def center_t_matrix(H: HopfAlgebra, lm: LMMaps, basis: list, S: Matrix | None = None) -> Matrix:
    """S^-1 v^-1 S on span(basis): the center form of T used with the Radford-Drinfeld S."""
    F = H.F
    S = S if S is not None else restrict(lm.S, basis, F)
    vinv = invert_element(H, lm.v)
    V = restrict(lambda x: H.mul(vinv, _raw(x)), basis, F)
    return linalg.matmul(linalg.inverse(S, F), linalg.matmul(V, S, F), F)


@dataclass
class KerlerReport:
    l: int
    basis_rank: int
    S: Matrix
    T: Matrix
    off_blocks_zero: bool
    S_higman_ok: bool
    S_semi_ok: bool
    T_scalar: Cyc | None
    S_nu_is_phi: bool

    @property
    def ok(self) -> bool:
        h = (self.l - 1) // 2
        return (self.basis_rank == 3 * h + 1 and self.off_blocks_zero and self.S_higman_ok
                and self.S_semi_ok and self.T_scalar is not None and self.S_nu_is_phi)

    def to_json(self) -> dict:
        return {"l": self.l, "ok": self.ok, "off_blocks_zero": self.off_blocks_zero,
                "S_higman": self.S_higman_ok, "S_semi": self.S_semi_ok,
                "T_scalar": None if self.T_scalar is None else self.T_scalar.to_json(),
                "S_nu_is_phi": self.S_nu_is_phi}


def kerler_blocks(inst) -> KerlerReport:
    """Matrices of S and S^-1 v^-1 S in the basis nu(0..h), rho(1..h), varphi(1..h).

    Expected: S = S_N (+) [[0, S_V], [-S_V, 0]] and
    T = c (T_N (+) [[T_V, T_V], [0, T_V]]) for one scalar c, columns holding images.
    """
    from .families.uqsl2_center import canonical_center
    from .repnlib import qcharacter

    H, F = inst.algebra, inst.algebra.F
    l = H.l
    h = (l - 1) // 2
    R, G = inst.ribbon.R.v, inst.ribbon.G.v
    Lam = inst.integrals.Lambda.v
    Q = drinfeld_matrix(H, R).v
    qch = {r: qcharacter(inst.table.simples[r - 1], G).v for r in range(1, l + 1)}
    cc = canonical_center(H, lambda r: drinfeld_map(H, None, qch[r], Q).v,
                          lambda r: radford_map(H, Lam, qch[r]).v)
    B = cc.kerler_basis()
    rk = linalg.rank(B, H.dim, F)
    lm = LMMaps(H, R, inst.integrals.lam.v, inst.ribbon.v.v, "minus")
    S = restrict(lm.S, B, F)
    T = center_t_matrix(H, lm, B, S)
    n = len(B)
    off = all(not S[i][j] and not T[i][j] for i in range(n) for j in range(n)
              if (i <= h) != (j <= h))
    g = inst.golden
    SN = block_matrix(S, range(h + 1), range(h + 1))
    Z = linalg.zeros(h, h, F)
    SV = g["S_V"]
    negSV = linalg.matscale(SV, -F.one)
    semi = [a + b for a, b in zip(Z, SV)] + [a + b for a, b in zip(negSV, Z)]
    TV = g["T_V"]
    tsemi = [a + b for a, b in zip(TV, TV)] + [a + b for a, b in zip(Z, TV)]
    expected_T = linalg.block_diag([g["T_N_raw"], tsemi], F)
    c = linalg.is_scalar_multiple(T, expected_T)
    nu_ok = True
    for r in range(h + 1):
        target = cc.phi[l] if r == 0 else vclean(_sum(cc.phi[r], cc.phi[l - r]))
        if lm.S(cc.nu(r)) != vclean(target):
            nu_ok = False
    return KerlerReport(l, rk, S, T, off, linalg.mat_equal(SN, g["S_N"]),
                        linalg.mat_equal(block_matrix(S, range(h + 1, n), range(h + 1, n)), semi),
                        c, nu_ok)


def _sum(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        o = out.get(k)
        out[k] = v if o is None else o + v
    return out
