"""Canonical central elements of U_q sl(2): Casimir, block idempotents P_j,
nilpotents N_j and N_j^+-, and the Drinfeld and Radford images of q-characters."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction

from ..cyclo import Cyc, sqrt_integer
from ..hopf import HopfAlgebra, vclean
from .uqsl2_alg import pbw_index


def _add(a: dict, b: dict, s=None) -> dict:
    out = dict(a)
    for k, v in b.items():
        v = v if s is None else v * s
        o = out.get(k)
        out[k] = v if o is None else o + v
    return vclean(out)


def _scale(a: dict, s) -> dict:
    return vclean({k: v * s for k, v in a.items()})


# polynomials are coefficient lists, lowest degree first


def poly_mul(p: list, q: list, F) -> list:
    out = [F.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = out[i + j] + a * b
    return out


def poly_eval(p: list, x: Cyc, F) -> Cyc:
    acc = F.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p: list, F) -> list:
    return [p[k] * k for k in range(1, len(p))] or [F.zero]


def casimir(H: HopfAlgebra) -> dict:
    """C = EF + (q^-1 K + q K^-1)/(q - q^-1)^2."""
    l, qn, F = H.l, H.qnumbers, H.F
    E = {pbw_index(l, 0, 1, 0): F.one}
    Fg = {pbw_index(l, 1, 0, 0): F.one}
    d2 = qn.qdiff ** 2
    tail = {pbw_index(l, 0, 0, 1): qn.qpow(-1) / d2, pbw_index(l, 0, 0, l - 1): qn.qpow(1) / d2}
    return _add(H.mul(E, Fg), tail)


@dataclass
class UqCanonicalCenter:
    """Kerler's canonical basis of Z(U_q sl(2)) and the derived bases nu, rho, varphi."""

    H: HopfAlgebra
    C: dict
    b: list
    P: list
    N: list
    Nplus: list
    Nminus: list
    pi_plus: list
    pi_minus: list
    chi: dict = dfield(default_factory=dict)
    phi: dict = dfield(default_factory=dict)

    @property
    def h(self) -> int:
        return (self.H.l - 1) // 2

    def nu(self, r: int) -> dict:
        l = self.H.l
        if r == 0:
            return self.chi[l]
        return _add(self.chi[r], self.chi[l - r])

    def rho(self, r: int) -> dict:
        l, F = self.H.l, self.H.F
        a = F.from_fraction(Fraction(l - r, l))
        b = F.from_fraction(Fraction(-r, l))
        return _add(_scale(self.chi[r], a), self.chi[l - r], b)

    def phi_comb(self, r: int) -> dict:
        """(l-r)/l phi(r) - r/l phi(l-r)."""
        l, F = self.H.l, self.H.F
        a = F.from_fraction(Fraction(l - r, l))
        b = F.from_fraction(Fraction(-r, l))
        return _add(_scale(self.phi[r], a), self.phi[l - r], b)

    def varphi(self, r: int) -> dict:
        """l^(-1/2) sum_j (q^(jr) - q^(-jr)) phi_comb(j)."""
        H = self.H
        qn, F = H.qnumbers, H.F
        s = sqrt_integer(H.l, F.N).inverse()
        acc: dict = {}
        for j in range(1, self.h + 1):
            acc = _add(acc, self.phi_comb(j), (qn.qpow(j * r) - qn.qpow(-j * r)) * s)
        return acc

    def kerler_basis(self) -> list[dict]:
        h = self.h
        return ([self.nu(r) for r in range(h + 1)] + [self.rho(r) for r in range(1, h + 1)]
                + [self.varphi(r) for r in range(1, h + 1)])


def _power_table(H: HopfAlgebra, x: dict, top: int) -> list[dict]:
    out = [dict(H.unit)]
    for _ in range(top):
        out.append(vclean(H.mul(out[-1], x)))
    return out


def _eval_in(H: HopfAlgebra, p: list, powers: list[dict]) -> dict:
    acc: dict = {}
    for k, c in enumerate(p):
        if c:
            acc = _add(acc, powers[k], c)
    return acc


def canonical_center(H: HopfAlgebra, chi_fn=None, phi_fn=None) -> UqCanonicalCenter:
    """Lagrange-interpolation idempotents of the Casimir plus the projections pi_j^+-.

    ``chi_fn(r)`` and ``phi_fn(r)`` supply the Drinfeld and Radford images of
    the q-character of V_r when given.
    """
    l, qn, F = H.l, H.qnumbers, H.F
    h = (l - 1) // 2
    d2 = qn.qdiff ** 2
    b = [(qn.qpow(j) + qn.qpow(-j)) / d2 for j in range(l + 1)]
    C = casimir(H)
    powers = _power_table(H, C, l)
    P, N = [], [None]
    for j in range(h + 1):
        phij = [F.one]
        for i in range(1, l + 1):
            if b[i] != b[j]:
                phij = poly_mul(phij, [-b[i], F.one], F)
        v = poly_eval(phij, b[j], F)
        dv = poly_eval(poly_deriv(phij, F), b[j], F)
        shifted = poly_mul([-b[j], F.one], phij, F)
        Pj = _add(_scale(_eval_in(H, phij, powers), v.inverse()),
                  _eval_in(H, shifted, powers), -dv / (v * v))
        P.append(Pj)
        if j:
            N.append(_scale(_eval_in(H, shifted, powers), v.inverse()))
    inv_l = F.from_fraction(Fraction(1, l))
    pip, pim = [None], [None]
    for j in range(1, h + 1):
        plus: dict = {}
        minus: dict = {}
        for n in range(l):
            target = plus if n < j else minus
            for i in range(l):
                k = pbw_index(l, 0, 0, i)
                target[k] = target.get(k, F.zero) + qn.qpow((2 * n - j + 1) * i) * inv_l
        pip.append(vclean(plus))
        pim.append(vclean(minus))
    Np = [None] + [vclean(H.mul(pip[j], N[j])) for j in range(1, h + 1)]
    Nm = [None] + [vclean(H.mul(pim[j], N[j])) for j in range(1, h + 1)]
    cc = UqCanonicalCenter(H, C, b, P, N, Np, Nm, pip, pim)
    if chi_fn is not None:
        cc.chi = {r: chi_fn(r) for r in range(1, l + 1)}
    if phi_fn is not None:
        cc.phi = {r: phi_fn(r) for r in range(1, l + 1)}
    return cc


def closed_form_integrals(H: HopfAlgebra) -> tuple[dict, dict]:
    """Lambda = zeta F^(l-1) E^(l-1) sum_j K^j and lambda = zeta^-1 (F^(l-1)E^(l-1)K)^*,
    zeta = sqrt(l) / ([l-1]!)^2."""
    l, qn, F = H.l, H.qnumbers, H.F
    zeta = sqrt_integer(l, F.N) / (qn.fact[l - 1] ** 2)
    Lam = {pbw_index(l, l - 1, l - 1, j): zeta for j in range(l)}
    lam = {pbw_index(l, l - 1, l - 1, 1): zeta.inverse()}
    return Lam, lam
