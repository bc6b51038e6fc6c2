"""Simple modules V_r and projective covers P_r of U_q sl(2)."""

from __future__ import annotations

from ..hopf import HopfAlgebra
from ..repnlib import ModuleRep, s_zero
from .uqsl2_alg import pbw_index


def _gens(H: HopfAlgebra) -> tuple[int, int, int]:
    l = H.l
    return pbw_index(l, 0, 1, 0), pbw_index(l, 1, 0, 0), pbw_index(l, 0, 0, 1)


def simple_module(H: HopfAlgebra, r: int) -> ModuleRep:
    """V_r, basis v_0..v_(r-1) with v_0 of highest weight."""
    l, qn = H.l, H.qnumbers
    E, Fg, K = _gens(H)
    mE, mF, mK = s_zero(r), s_zero(r), s_zero(r)
    for n in range(r):
        mK[n][n] = qn.qpow(r - 1 - 2 * n)
        if n + 1 < r:
            mF[n + 1][n] = H.F.one
        if n >= 1:
            c = qn.int[n] * qn.int[r - n]
            if c:
                mE[n - 1][n] = c
    return ModuleRep(H, f"V{r}", r, {E: mE, Fg: mF, K: mK})


def projective_module(H: HopfAlgebra, r: int) -> ModuleRep:
    """P_r for 1 <= r <= l-1 on x_k, y_k (k < l-r) and a_n, b_n (n < r)."""
    l, qn = H.l, H.qnumbers
    one = H.F.one
    E, Fg, K = _gens(H)
    s = l - r
    X = lambda k: k
    Y = lambda k: s + k
    A = lambda n: 2 * s + n
    B = lambda n: 2 * s + r + n
    dim = 2 * l
    mE, mF, mK = s_zero(dim), s_zero(dim), s_zero(dim)

    def put(M, dst, src, c):
        if c:
            M[dst][src] = c

    for k in range(s):
        w = qn.qpow(s - 1 - 2 * k)
        put(mK, X(k), X(k), w)
        put(mK, Y(k), Y(k), w)
        if k >= 1:
            c = qn.int[k] * qn.int[s - k]
            put(mE, X(k - 1), X(k), c)
            put(mE, Y(k - 1), Y(k), c)
        if k + 1 < s:
            put(mF, X(k + 1), X(k), one)
            put(mF, Y(k + 1), Y(k), one)
    put(mE, A(r - 1), Y(0), one)
    put(mF, A(0), X(s - 1), one)
    for n in range(r):
        w = qn.qpow(r - 1 - 2 * n)
        put(mK, A(n), A(n), w)
        put(mK, B(n), B(n), w)
        if n >= 1:
            c = qn.int[n] * qn.int[r - n]
            put(mE, A(n - 1), A(n), c)
            put(mE, B(n - 1), B(n), c)
            put(mE, A(n - 1), B(n), one)
        if n + 1 < r:
            put(mF, A(n + 1), A(n), one)
            put(mF, B(n + 1), B(n), one)
    put(mE, X(s - 1), B(0), one)
    put(mF, Y(0), B(r - 1), one)
    return ModuleRep(H, f"P{r}", dim, {E: mE, Fg: mF, K: mK})
