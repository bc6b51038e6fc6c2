"""Finite-dimensional modules given by generator matrices: characters, tensor
products, Hom spaces, Grothendieck multiplicities, decomposition against a
known list of indecomposables, Cartan matrices and the Hopf-link matrix.

Matrices are sparse: a list of row dicts, ``A[i][j]`` the coefficient of basis
vector i in the image of basis vector j.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction
from typing import Sequence

from . import linalg
from .cyclo import Cyc, CyclotomicField
from .hopf import DualElem, HopfAlgebra, dual_product, vclean
from .ribbon import _raw

SMat = list  # list[dict[int, Cyc]]


class RelationError(ValueError):
    pass


class DecompositionError(ValueError):
    pass


# -- sparse matrices -----------------------------------------------------------


def s_identity(n: int, F: CyclotomicField) -> SMat:
    return [{i: F.one} for i in range(n)]


def s_zero(n: int) -> SMat:
    return [dict() for _ in range(n)]


def s_from_dense(M, F: CyclotomicField) -> SMat:
    return [{j: F.coerce(x) for j, x in enumerate(row) if x} for row in M]


def s_to_dense(A: SMat, ncols: int, F: CyclotomicField) -> list:
    return [[r.get(j, F.zero) for j in range(ncols)] for r in A]


def s_mul(A: SMat, B: SMat) -> SMat:
    out = []
    for row in A:
        acc: dict = {}
        for k, a in row.items():
            for j, b in B[k].items():
                o = acc.get(j)
                acc[j] = a * b if o is None else o + a * b
        out.append({j: v for j, v in acc.items() if v})
    return out


def s_add_scaled(acc: SMat, A: SMat, c: Cyc) -> None:
    for i, row in enumerate(A):
        r = acc[i]
        for j, a in row.items():
            o = r.get(j)
            v = a * c if o is None else o + a * c
            if v:
                r[j] = v
            else:
                r.pop(j, None)


def s_kron(A: SMat, B: SMat, mb: int) -> SMat:
    out = []
    for ra in A:
        for rb in B:
            row = {}
            for j, a in ra.items():
                for l, b in rb.items():
                    row[j * mb + l] = a * b
            out.append(row)
    return out


def s_trace(A: SMat, F: CyclotomicField) -> Cyc:
    s = F.zero
    for i, row in enumerate(A):
        x = row.get(i)
        if x is not None:
            s = s + x
    return s


def s_equal(A: SMat, B: SMat) -> bool:
    return len(A) == len(B) and all(vclean(dict(a)) == vclean(dict(b)) for a, b in zip(A, B))


def s_transpose(A: SMat, ncols: int) -> SMat:
    out = s_zero(ncols)
    for i, row in enumerate(A):
        for j, x in row.items():
            out[j][i] = x
    return out


# -- modules ----------------------------------------------------------------------


class ModuleRep:
    """A module over ``H`` given by one matrix per algebra generator.

    Basis elements act through the word certificate of ``H`` (or through
    ``basis_action`` when supplied). Construction checks
    rho(b) rho(g) = rho(b g) for every basis b and generator g, which makes
    rho an algebra map by induction on word length.
    """

    def __init__(self, H: HopfAlgebra, name: str, dim: int, generator_action: dict,
                 check: bool = True, basis_action: dict | None = None):
        self.H = H
        self.name = name
        self.dim = dim
        F = H.F
        self.gens = {g: (s_from_dense(m, F) if m and not isinstance(m[0], dict) else
                         [dict(r) for r in m]) for g, m in generator_action.items()}
        if not self.gens and dim == 0:
            self.gens = {}
        self._act: dict[int, SMat] = dict(basis_action or {})
        self._char: DualElem | None = None
        self._tensor_of: tuple | None = None
        if check:
            self.check_relations()

    # basis actions
    def action(self, b: int) -> SMat:
        A = self._act.get(b)
        if A is not None:
            return A
        H = self.H
        F = H.F
        if {b: F.one} == H.unit:
            A = s_identity(self.dim, F)
        elif b in self.gens:
            A = self.gens[b]
        elif H.words is not None and b in H.words:
            p, g = H.words[b]
            A = s_mul(self.action(p), self.action(g))
        else:
            raise RelationError(f"no way to act by {H.labels[b]}")
        self._act[b] = A
        return A

    def act(self, x) -> SMat:
        """Action matrix of an arbitrary element."""
        acc = s_zero(self.dim)
        for b, c in _raw(x).items():
            s_add_scaled(acc, self.action(b), c)
        return acc

    def check_relations(self) -> None:
        H = self.H
        gens = list(H.generators) if H.generators else list(range(H.dim))
        for g in gens:
            if g not in self.gens:
                raise RelationError(f"missing action of generator {H.labels[g]}")
        for b in range(H.dim):
            Ab = self.action(b)
            for g in gens:
                lhs = s_mul(Ab, self.gens[g])
                rhs = self.act(dict(H.prod(b, g)))
                if not s_equal(lhs, rhs):
                    raise RelationError(
                        f"{self.name}: rho({H.labels[b]}) rho({H.labels[g]}) != rho({H.labels[b]}*{H.labels[g]})")

    def to_json(self) -> dict:
        F = self.H.F
        return {"name": self.name, "dim": self.dim,
                "generators": {self.H.labels[g]: [[x.to_json() for x in row]
                                                  for row in s_to_dense(A, self.dim, F)]
                               for g, A in self.gens.items()}}

    def __repr__(self):
        return f"ModuleRep({self.name}, dim={self.dim})"


def module_from_generators(H: HopfAlgebra, actions: dict, name: str = "M",
                           check: bool = True) -> ModuleRep:
    """``actions`` maps generator index or label to a dense or sparse matrix."""
    acts = {}
    dim = None
    for g, m in actions.items():
        gi = H.index(g) if isinstance(g, str) else g
        acts[gi] = m
        dim = len(m)
    return ModuleRep(H, name, dim or 0, acts, check=check)


def trivial_module(H: HopfAlgebra) -> ModuleRep:
    gens = list(H.generators) if H.generators else list(range(H.dim))
    return ModuleRep(H, "trivial", 1, {g: [[H.counit[g]]] for g in gens})


def one_dim_module(H: HopfAlgebra, values: dict, name: str) -> ModuleRep:
    return ModuleRep(H, name, 1, {g: [[H.F.coerce(v)]] for g, v in values.items()})


def left_ideal_module(H: HopfAlgebra, e, name: str, check: bool = True) -> ModuleRep:
    """The left ideal H e with its left-multiplication action."""
    e = vclean(dict(_raw(e)))
    F = H.F
    vecs = [vclean(H.mul({b: F.one}, e)) for b in range(H.dim)]
    basis = linalg.span_basis(vecs, H.dim, F)
    pivots = [min(v) for v in basis]
    gens = list(H.generators) if H.generators else list(range(H.dim))
    acts = {}
    for g in gens:
        cols = []
        for v in basis:
            w = vclean(H.mul({g: F.one}, v))
            # echelon basis: coordinates are the entries at the pivots
            coords = {i: w[p] for i, p in enumerate(pivots) if p in w}
            cols.append(coords)
        acts[g] = s_transpose(cols, len(basis))
    M = ModuleRep(H, name, len(basis), acts, check=check)
    M.ideal_basis = basis
    return M


def tensor_module(M: ModuleRep, N: ModuleRep, name: str | None = None,
                  check: bool = False) -> ModuleRep:
    """Generators act through (rho_M (x) rho_N) Delta."""
    if M.H is not N.H:
        raise ValueError("modules over different algebras")
    H = M.H
    acts = {}
    for g in M.gens:
        acc = s_zero(M.dim * N.dim)
        for (a, b), c in H.comult[g]:
            s_add_scaled(acc, s_kron(M.action(a), N.action(b), N.dim), c)
        acts[g] = acc
    T = ModuleRep(H, name or f"{M.name}(x){N.name}", M.dim * N.dim, acts, check=check)
    T._tensor_of = (M, N)
    return T


def dual_module(M: ModuleRep, name: str | None = None) -> ModuleRep:
    """M^* with rho^*(g) = rho(S(g))^T."""
    H = M.H
    acts = {g: s_transpose(M.act(H.S({g: H.F.one})), M.dim) for g in M.gens}
    return ModuleRep(H, name or f"{M.name}^*", M.dim, acts)


# -- Hom spaces -------------------------------------------------------------------


def hom_space(M: ModuleRep, N: ModuleRep) -> list[dict]:
    """Basis of {X : X rho_M(g) = rho_N(g) X}; X flattened as X[p][q] -> p*dim M + q."""
    if M.H is not N.H:
        raise ValueError("modules over different algebras")
    m, n = M.dim, N.dim
    rows = []
    for g in M.gens:
        A = M.gens[g]
        B = N.gens[g]
        At = s_transpose(A, m)
        for p in range(n):
            for s in range(m):
                row: dict = {}
                for q, a in At[s].items():
                    row[p * m + q] = a
                for r, b in B[p].items():
                    k = r * m + s
                    o = row.get(k)
                    row[k] = -b if o is None else o - b
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return linalg.nullspace(rows, m * n, M.H.F)


def hom_space_dim(M: ModuleRep, N: ModuleRep) -> int:
    if M.dim == 0 or N.dim == 0:
        return 0
    return len(hom_space(M, N))


# -- characters ------------------------------------------------------------------


def character(M: ModuleRep) -> DualElem:
    """Trace of every basis action; tensor products use convolution through Delta."""
    if M._char is None:
        H = M.H
        if M._tensor_of is not None:
            a, b = M._tensor_of
            v = dual_product(H, character(a).v, character(b).v)
        else:
            v = {}
            for x in range(H.dim):
                t = s_trace(M.action(x), H.F)
                if t:
                    v[x] = t
        M._char = DualElem(H, v)
    return M._char


def character_by_traces(M: ModuleRep) -> DualElem:
    """Character computed from the action matrices directly (no shortcut)."""
    H = M.H
    return DualElem(H, {x: t for x in range(H.dim) if (t := s_trace(M.action(x), H.F))})


def qcharacter(M: ModuleRep, G) -> DualElem:
    """b -> Tr_M(G^-1 b)."""
    from .center import group_inverse
    H = M.H
    Ginv = group_inverse(H, G)
    chi = character(M).v
    out = {}
    for b in range(H.dim):
        s = H.F.zero
        for k, c in H.mul(Ginv, {b: H.F.one}).items():
            f = chi.get(k)
            if f:
                s = s + f * c
        if s:
            out[b] = s
    return DualElem(H, out)


def shift_character(H: HopfAlgebra, chi, G) -> DualElem:
    """b -> chi(G b)."""
    from .ribbon import shift_functional
    return DualElem(H, shift_functional(H, chi, G))


# -- character tables ----------------------------------------------------------------


@dataclass
class CharacterTable:
    """Simples V_i and their projective covers P_i in matching order.

    ``steinberg[i]`` marks a simple that is its own projective cover;
    ``socle_dims[i]`` is the dimension of the simple socle of P_i.
    """

    H: HopfAlgebra
    simples: list
    projectives: list
    steinberg: list
    socle_dims: list = dfield(default_factory=list)

    def __post_init__(self):
        if not self.socle_dims:
            self.socle_dims = [V.dim for V in self.simples]

    @property
    def names(self) -> list[str]:
        return [V.name for V in self.simples]

    @property
    def irreducible(self) -> list[DualElem]:
        return [character(V) for V in self.simples]

    @property
    def projective(self) -> list[DualElem]:
        return [character(P) for P in self.projectives]

    @property
    def rank(self) -> int:
        return len(self.simples)

    @property
    def total_rank(self) -> int:
        return len(self.simples) + sum(1 for s in self.steinberg if not s)


def _as_int(x: Cyc, what: str) -> int:
    if not x.is_rational():
        raise DecompositionError(f"{what}: non-rational multiplicity {x}")
    f = x.to_fraction()
    if f.denominator != 1:
        raise DecompositionError(f"{what}: non-integral multiplicity {f}")
    return int(f)


def grothendieck_multiplicities(M, table: CharacterTable) -> list[int]:
    """[M : V_k] from chi_M = sum_k g_k chi_k."""
    chi = character(M).v if isinstance(M, ModuleRep) else _raw(M)
    irr = [c.v for c in table.irreducible]
    sol = linalg.coordinates(chi, irr, table.H.F)
    if sol is None:
        raise DecompositionError("character is not in the span of the irreducible characters")
    return [_as_int(x, "Grothendieck") for x in sol]


def cartan_matrix(table: CharacterTable) -> list[list[int]]:
    """C with p_j = sum_i C_ij chi_i; symmetry asserted."""
    cols = [grothendieck_multiplicities(P, table) for P in table.projectives]
    r = table.rank
    C = [[cols[j][i] for j in range(r)] for i in range(r)]
    if any(C[i][j] != C[j][i] for i in range(r) for j in range(r)):
        raise DecompositionError(f"Cartan matrix is not symmetric: {C}")
    return C


def decompose(M: ModuleRep, table: CharacterTable) -> dict[str, int]:
    """Multiplicities of simples and projective covers in M.

    With g the Grothendieck vector, h_k = dim Hom(M, V_k), m the projective and
    n the simple multiplicities: g = n + C m and h = n + m, so (C - I) m = g - h on
    the non-Steinberg rows; a Steinberg simple is counted once from h.
    """
    F = table.H.F
    g = grothendieck_multiplicities(M, table)
    h = [hom_space_dim(M, V) for V in table.simples]
    C = cartan_matrix(table)
    r = table.rank
    ns = [k for k in range(r) if not table.steinberg[k]]
    rows = []
    for a, k in enumerate(ns):
        row = {b: F.from_int(C[k][j] - (1 if j == k else 0)) for b, j in enumerate(ns)}
        row = {b: x for b, x in row.items() if x}
        rhs = g[k] - h[k]
        if rhs:
            row[len(ns)] = F.from_int(rhs)
        rows.append(row)
    sol = linalg.solve_augmented(rows, len(ns), F)
    if sol is None:
        raise DecompositionError("not quasi-dominated by family list")
    m = [0] * r
    for b, k in enumerate(ns):
        m[k] = _as_int(sol[b], "projective")
    n = [h[k] - m[k] for k in range(r)]
    if any(x < 0 for x in m + n):
        raise DecompositionError("not quasi-dominated by family list")
    out: dict[str, int] = {}
    dim = 0
    acc: dict = {}
    for k in range(r):
        if n[k]:
            out[table.simples[k].name] = n[k]
            dim += n[k] * table.simples[k].dim
            for x, v in character(table.simples[k]).v.items():
                acc[x] = acc.get(x, F.zero) + v * n[k]
        if m[k] and not table.steinberg[k]:
            out[table.projectives[k].name] = m[k]
            dim += m[k] * table.projectives[k].dim
            for x, v in character(table.projectives[k]).v.items():
                acc[x] = acc.get(x, F.zero) + v * m[k]
    if dim != M.dim or vclean(acc) != vclean(dict(character(M).v)):
        raise DecompositionError("not quasi-dominated by family list")
    return out


# -- Hopf-link matrix ------------------------------------------------------------------


@dataclass
class HopfLinkResult:
    matrix: list
    rank: int


def hopf_link_s_matrix(simples: Sequence[ModuleRep], R, G) -> HopfLinkResult:
    """Entry (X, Y) = Tr_{X(x)Y}((G^-1 (x) G^-1) R21 R), without normalization."""
    from .center import group_inverse
    from .ribbon import drinfeld_matrix
    H = simples[0].H
    Ginv = group_inverse(H, G)
    Q = drinfeld_matrix(H, R).v
    GQ = H.tmul(H.tensor(Ginv, Ginv), Q)
    chars = [character(V).v for V in simples]
    n = len(simples)
    M = linalg.zeros(n, n, H.F)
    for i in range(n):
        for j in range(n):
            s = H.F.zero
            for (a, b), c in GQ.items():
                x, y = chars[i].get(a), chars[j].get(b)
                if x and y:
                    s = s + c * x * y
            M[i][j] = s
    return HopfLinkResult(M, linalg.matrank(M, H.F))


def hopf_link_oracle(X: ModuleRep, Y: ModuleRep, R, G) -> Cyc:
    """Brute-force trace over the tensor product module of the same element."""
    from .center import group_inverse
    from .ribbon import drinfeld_matrix
    H = X.H
    Ginv = group_inverse(H, G)
    Q = drinfeld_matrix(H, R).v
    GQ = H.tmul(H.tensor(Ginv, Ginv), Q)
    acc = s_zero(X.dim * Y.dim)
    for (a, b), c in GQ.items():
        s_add_scaled(acc, s_kron(X.action(a), Y.action(b), Y.dim), c)
    return s_trace(acc, H.F)


# -- idempotents ------------------------------------------------------------------------


def split_idempotent(P: ModuleRep, H: HopfAlgebra | None = None) -> dict:
    """An idempotent e of H with H e isomorphic to the projective module P.

    Picks an injective module map iota: P -> H and solves iota(p) w = p for w in P;
    then e = iota(w) satisfies e^2 = e and H e = iota(P).
    """
    H = H or P.H
    F = H.F
    d = H.dim
    reg_gens = {}
    for g in P.gens:
        cols = [vclean(H.mul({g: F.one}, {j: F.one})) for j in range(d)]
        reg_gens[g] = s_transpose(cols, d)
    Hreg = ModuleRep(H, "H", d, reg_gens, check=False)
    homs = hom_space(P, Hreg)
    m = P.dim
    # deterministic search over small integer combinations of the Hom basis
    candidates = [[1 if i == j else 0 for i in range(len(homs))] for j in range(len(homs))]
    candidates.append([1] * len(homs))
    candidates.append([i + 1 for i in range(len(homs))])
    for coeffs in reversed(candidates):
        X: dict = {}
        for c, v in zip(coeffs, homs):
            if c:
                for k, x in v.items():
                    X[k] = X.get(k, F.zero) + x * c
        X = vclean(X)
        # iota(p_q) = sum_p X[p][q] b_p
        iota = []
        for q in range(m):
            iota.append(vclean({p: X[p * m + q] for p in range(d) if (p * m + q) in X}))
        if linalg.rank(iota, d, F) != m:
            continue
        # iota(p) w = p for every basis p, w = sum_s w_s p_s unknown
        rows = []
        for q in range(m):
            A = P.act(iota[q])
            for i in range(m):
                row = {s: A[i][s] for s in A[i]}
                if i == q:
                    row[m] = F.one
                rows.append(row)
        sol = linalg.solve_augmented(rows, m, F)
        if sol is None:
            continue
        e: dict = {}
        for s, ws in enumerate(sol):
            if ws:
                for k, x in iota[s].items():
                    e[k] = e.get(k, F.zero) + x * ws
        e = vclean(e)
        if vclean(H.mul(e, e)) == e:
            return e
    raise DecompositionError(f"could not split {P.name} off the regular module")
