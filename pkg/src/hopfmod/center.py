"""Centers, integrals, q-characters, the Higman trace map and the Radford and
Frobenius maps, all computed as exact kernels and spans."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .cyclo import Cyc
from .hopf import AlgElem, DualElem, HopfAlgebra, vclean
from .ribbon import _raw, invert_element, is_grouplike


class StructuralError(ValueError):
    """An integral space with the wrong dimension, or a non-invariant subspace."""


def _gens(H: HopfAlgebra) -> list[int]:
    return list(H.generators) if H.generators else list(range(H.dim))


def _columns_to_rows(cols: list[dict], nrows_hint: int = 0) -> list[dict]:
    rows: dict[int, dict] = {}
    for j, col in enumerate(cols):
        for k, c in col.items():
            rows.setdefault(k, {})[j] = c
    return list(rows.values())


@dataclass
class CenterBasis:
    H: HopfAlgebra
    elements: list[AlgElem]

    @property
    def dim(self) -> int:
        return len(self.elements)

    def vectors(self) -> list[dict]:
        return [e.v for e in self.elements]

    def to_json(self) -> list:
        return [{self.H.labels[k]: c.to_json() for k, c in sorted(e.v.items())}
                for e in self.elements]


def center_basis(H: HopfAlgebra) -> CenterBasis:
    """Kernel of the stacked commutator maps x -> g x - x g over the generators."""
    d = H.dim
    rows: list[dict] = []
    for g in _gens(H):
        bg = {g: H.F.one}
        cols = []
        for j in range(d):
            bj = {j: H.F.one}
            cols.append(vclean(linalg_sub(H.mul(bg, bj), H.mul(bj, bg))))
        # each output coordinate gives one equation in the unknown coordinates of x
        rows.extend(_columns_to_rows(cols))
    ns = linalg.nullspace(rows, d, H.F)
    return CenterBasis(H, [AlgElem(H, v) for v in ns])


def linalg_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        o = out.get(k)
        out[k] = -v if o is None else o - v
    return out


def is_central(H: HopfAlgebra, z) -> bool:
    z = vclean(dict(_raw(z)))
    for g in _gens(H):
        bg = {g: H.F.one}
        if vclean(H.mul(bg, z)) != vclean(H.mul(z, bg)):
            return False
    return True


# -- integrals -----------------------------------------------------------------


def _one_dim(vs: list[dict], what: str) -> dict:
    if len(vs) != 1:
        raise StructuralError(f"{what} space has dimension {len(vs)}, expected 1")
    return vs[0]


def _integral_space(H: HopfAlgebra, side: str) -> list[dict]:
    d = H.dim
    rows: list[dict] = []
    for g in _gens(H):
        bg = {g: H.F.one}
        e = H.counit[g]
        cols = []
        for j in range(d):
            bj = {j: H.F.one}
            p = H.mul(bg, bj) if side == "left" else H.mul(bj, bg)
            cols.append(vclean(linalg_sub(p, {j: e} if e else {})))
        rows.extend(_columns_to_rows(cols))
    return linalg.nullspace(rows, d, H.F)


def left_integral(H: HopfAlgebra) -> AlgElem:
    """Lambda with h Lambda = eps(h) Lambda (generators suffice by multiplicativity)."""
    return AlgElem(H, _one_dim(_integral_space(H, "left"), "left integral"))


def right_integral(H: HopfAlgebra) -> AlgElem:
    return AlgElem(H, _one_dim(_integral_space(H, "right"), "right integral"))


def is_unimodular(H: HopfAlgebra) -> bool:
    a = left_integral(H).v
    b = right_integral(H).v
    return linalg.rank([a, b], H.dim, H.F) == 1


def cointegral(H: HopfAlgebra, side: str = "right") -> DualElem:
    """lambda in H^* with (lambda (x) id) Delta(x) = lambda(x) 1 (``right``)
    or (id (x) lambda) Delta(x) = lambda(x) 1 (``left``)."""
    d = H.dim
    unit = H.unit
    rows: dict[tuple, dict] = {}
    for x in range(d):
        for (a, b), c in H.comult[x]:
            src, out = (a, b) if side == "right" else (b, a)
            r = rows.setdefault((x, out), {})
            r[src] = r[src] + c if src in r else c
        for k, u in unit.items():
            r = rows.setdefault((x, k), {})
            r[x] = r[x] - u if x in r else -u
    ns = linalg.nullspace(list(rows.values()), d, H.F)
    return DualElem(H, _one_dim(ns, f"{side} cointegral"))


@dataclass
class IntegralPair:
    Lambda: AlgElem
    lam: DualElem
    normalized: bool

    def to_json(self) -> dict:
        H = self.Lambda.parent
        return {"Lambda": {H.labels[k]: c.to_json() for k, c in sorted(self.Lambda.v.items())},
                "lambda": {H.labels[k]: c.to_json() for k, c in sorted(self.lam.v.items())},
                "normalized": self.normalized}


def normalize_pair(Lam: AlgElem, lam: DualElem) -> IntegralPair:
    """Rescale lambda so that lambda(Lambda) = 1."""
    s = lam(Lam)
    if not s:
        raise StructuralError("lambda(Lambda) = 0; cannot normalize")
    return IntegralPair(Lam, lam * s.inverse(), True)


def integral_pair(H: HopfAlgebra) -> IntegralPair:
    return normalize_pair(left_integral(H), cointegral(H, "right"))


# -- q-characters ----------------------------------------------------------------


def qchar_space(H: HopfAlgebra) -> list[DualElem]:
    """Solutions of beta(x y) = beta(S^2(y) x) over basis x and generators y.

    Generators suffice: if it holds for y1 and y2 then
    beta(x y1 y2) = beta(S^2(y2) x y1) = beta(S^2(y1 y2) x).
    """
    d = H.dim
    rows: list[dict] = []
    for y in _gens(H):
        by = {y: H.F.one}
        s2y = H.S(H.S(by))
        for x in range(d):
            bx = {x: H.F.one}
            r = vclean(linalg_sub(H.mul(bx, by), H.mul(s2y, bx)))
            if r:
                rows.append(r)
    return [DualElem(H, v) for v in linalg.nullspace(rows, d, H.F)]


def is_qcharacter(H: HopfAlgebra, beta) -> bool:
    beta = _raw(beta)
    for y in _gens(H):
        by = {y: H.F.one}
        s2y = H.S(H.S(by))
        for x in range(H.dim):
            bx = {x: H.F.one}
            r = linalg_sub(H.mul(bx, by), H.mul(s2y, bx))
            s = H.F.zero
            for k, c in r.items():
                f = beta.get(k)
                if f:
                    s = s + f * c
            if s:
                return False
    return True


# -- Higman ideal --------------------------------------------------------------


def group_inverse(H: HopfAlgebra, G) -> dict:
    G = _raw(G)
    if is_grouplike(H, G):
        return vclean(H.S(G))
    return invert_element(H, G)


class TraceMap:
    """tau(x) = sum S(Lambda_2) x Lambda_1 G^-1, with the coproduct of Lambda cached."""

    def __init__(self, H: HopfAlgebra, G, Lam):
        self.H = H
        self.Ginv = group_inverse(H, G)
        terms = []
        for (a, b), c in H.comul(_raw(Lam)).items():
            terms.append((vclean(H.S({b: H.F.one})), a, c))
        self.terms = terms

    def __call__(self, x) -> AlgElem:
        H = self.H
        x = _raw(x)
        acc: dict = {}
        for sb, a, c in self.terms:
            left = H.mul(sb, x)
            if not left:
                continue
            p = H.mul(left, {a: c})
            for k, v in p.items():
                o = acc.get(k)
                acc[k] = v if o is None else o + v
        return AlgElem(H, vclean(H.mul(vclean(acc), self.Ginv)))


def trace_map(H: HopfAlgebra, G, Lam, x) -> AlgElem:
    return TraceMap(H, G, Lam)(x)


def higman_ideal(H: HopfAlgebra, G, Lam) -> list[AlgElem]:
    """Echelonized basis of the span of tau(b) over the basis of H."""
    tau = TraceMap(H, G, Lam)
    images = [tau({b: H.F.one}).v for b in range(H.dim)]
    return [AlgElem(H, v) for v in linalg.span_basis(images, H.dim, H.F)]


# -- Radford and Frobenius maps ----------------------------------------------


def radford_map(H: HopfAlgebra, Lam, alpha) -> AlgElem:
    """phi_R(alpha) = sum alpha(Lambda_1) Lambda_2."""
    alpha = _raw(alpha)
    acc: dict = {}
    for (a, b), c in H.comul(_raw(Lam)).items():
        f = alpha.get(a)
        if f:
            o = acc.get(b)
            acc[b] = f * c if o is None else o + f * c
    return AlgElem(H, vclean(acc))


def frobenius_map(H: HopfAlgebra, lam, a) -> DualElem:
    """Psi(a)(b) = lambda(S(a) b)."""
    lam = _raw(lam)
    sa = H.S(_raw(a))
    out = {}
    for b in range(H.dim):
        s = H.F.zero
        for k, c in H.mul(sa, {b: H.F.one}).items():
            f = lam.get(k)
            if f:
                s = s + f * c
        if s:
            out[b] = s
    return DualElem(H, out)


def in_span(H: HopfAlgebra, v, basis) -> bool:
    return linalg.in_span(_raw(v), [_raw(b) for b in basis], H.dim, H.F)


def span_equal(H: HopfAlgebra, A, B) -> bool:
    A = [_raw(a) for a in A]
    B = [_raw(b) for b in B]
    ra = linalg.rank(A, H.dim, H.F)
    return ra == linalg.rank(B, H.dim, H.F) == linalg.rank(A + B, H.dim, H.F)


def coords_in(H: HopfAlgebra, v, basis) -> list[Cyc] | None:
    return linalg.coordinates(_raw(v), [_raw(b) for b in basis], H.F)
