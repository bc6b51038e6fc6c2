"""Nichols Hopf algebras K_n and their doubles DK_n by normal-form rewriting.

K_n basis: K^a xi_S (a in {0,1}, S a subset of {1..n} as a bitmask), index
``a * 2**n + S``. DK_n basis: K^a Kb^b xi_S xib_T, index
``((2a + b) * 2**n + S) * 2**n + T``. Kb stands for K-bar, xib for xi-bar.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..cyclo import field
from ..hopf import HopfAlgebra
from ._build import hopf_from_generators


def popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _insert_sign(mask: int, j: int) -> int:
    """Sign of moving x_j from the right end into an ascending word ``mask``."""
    return -1 if popcount(mask >> (j + 1)) % 2 else 1


def word_label(mask: int, sym: str) -> str:
    return "".join(f"{sym}{i + 1}" for i in _bits(mask))


# -- K_n ------------------------------------------------------------------


def kn_index(n: int, a: int, S: int) -> int:
    return a * (1 << n) + S


def kn_label(n: int, idx: int) -> str:
    a, S = divmod(idx, 1 << n)
    parts = (["K"] if a else []) + ([word_label(S, "x")] if S else [])
    return ".".join(parts) or "1"


def kn_product(n: int, i: int, j: int):
    a, S = divmod(i, 1 << n)
    b, T = divmod(j, 1 << n)
    if S & T:
        return {}
    sign = -1 if (b * popcount(S)) % 2 else 1
    # xi_S xi_T -> xi_{S|T}
    for t in _bits(T):
        if popcount(S >> (t + 1)) % 2:
            sign = -sign
        S |= 1 << t
    return {kn_index(n, (a + b) % 2, S): sign}


@lru_cache(maxsize=None)
def nichols_algebra(n: int, conductor: int = 8) -> HopfAlgebra:
    if n < 1:
        raise ValueError("n must be >= 1")
    F = field(conductor)
    d = 1 << (n + 1)
    labels = [kn_label(n, i) for i in range(d)]
    one = F.one

    def rule(i, j):
        return [(k, F.from_int(c)) for k, c in kn_product(n, i, j).items()]

    K = kn_index(n, 1, 0)
    xs = [kn_index(n, 0, 1 << i) for i in range(n)]
    words = []
    for idx in range(d):
        a, S = divmod(idx, 1 << n)
        words.append([K] * a + [xs[i] for i in _bits(S)])
    gen_comult = {K: {(K, K): one}}
    gen_counit = {K: 1}
    gen_antipode = {K: {K: one}}
    for x in xs:
        gen_comult[x] = {(K, x): one, (x, 0): one}
        gen_counit[x] = 0
        # S(xi) = -K xi
        gen_antipode[x] = {k: F.from_int(-c) for k, c in kn_product(n, K, x).items()}
    return hopf_from_generators(F, labels, rule, 0, words, gen_comult, gen_counit,
                                gen_antipode, name=f"K_{n}")


# -- DK_n -----------------------------------------------------------------


def dk_index(n: int, a: int, b: int, S: int, T: int) -> int:
    return ((2 * a + b) * (1 << n) + S) * (1 << n) + T


def dk_unpack(n: int, idx: int) -> tuple[int, int, int, int]:
    rest, T = divmod(idx, 1 << n)
    ab, S = divmod(rest, 1 << n)
    a, b = divmod(ab, 2)
    return a, b, S, T


def dk_label(n: int, idx: int) -> str:
    a, b, S, T = dk_unpack(n, idx)
    parts = (["K"] if a else []) + (["Kb"] if b else [])
    if S:
        parts.append(word_label(S, "x"))
    if T:
        parts.append(word_label(T, "y"))
    return ".".join(parts) or "1"


def _dk_rmul(n: int, state: dict, gen: tuple) -> dict:
    """Right-multiply an integer-coefficient combination of normal words by a generator.

    ``gen`` is ("K",), ("Kb",), ("x", j) or ("y", j) with 0-based j; "y" is xi-bar.
    """
    out: dict = {}

    def add(key, c):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    kind = gen[0]
    for idx, c in state.items():
        a, b, S, T = dk_unpack(n, idx)
        odd = (popcount(S) + popcount(T)) % 2
        sgn = -1 if odd else 1
        if kind == "K":
            add(dk_index(n, 1 - a, b, S, T), c * sgn)
        elif kind == "Kb":
            add(dk_index(n, a, 1 - b, S, T), c * sgn)
        elif kind == "y":
            j = gen[1]
            if T >> j & 1:
                continue
            add(dk_index(n, a, b, S, T | 1 << j), c * _insert_sign(T, j))
        else:
            j = gen[1]
            # move x_j leftwards through the xi-bar word T (from its right end)
            tb = _bits(T)
            passed = 0
            for pos in range(len(tb) - 1, -1, -1):
                t = tb[pos]
                if t == j:
                    # y_j x_j = (1 - K Kb) - x_j y_j ; K Kb is even so it moves freely
                    s = -1 if passed % 2 else 1
                    T2 = T & ~(1 << j)
                    add(dk_index(n, a, b, S, T2), c * s)
                    add(dk_index(n, 1 - a, 1 - b, S, T2), -c * s)
                passed += 1
            # the term where x_j passed all of T with sign flips
            if S >> j & 1:
                continue
            s = -1 if len(tb) % 2 else 1
            s *= _insert_sign(S, j)
            add(dk_index(n, a, b, S | 1 << j, T), c * s)
    return out


def dk_word(n: int, idx: int) -> list[tuple]:
    a, b, S, T = dk_unpack(n, idx)
    return ([("K",)] * a + [("Kb",)] * b + [("x", i) for i in _bits(S)]
            + [("y", i) for i in _bits(T)])


def dk_product(n: int, i: int, j: int) -> dict:
    state = {i: 1}
    for g in dk_word(n, j):
        state = _dk_rmul(n, state, g)
        if not state:
            break
    return state


@lru_cache(maxsize=None)
def dnichols_algebra(n: int, conductor: int = 8) -> HopfAlgebra:
    if n < 1:
        raise ValueError("n must be >= 1")
    F = field(conductor)
    d = 1 << (2 * n + 2)
    labels = [dk_label(n, i) for i in range(d)]
    one = F.one

    def rule(i, j):
        return [(k, F.from_int(c)) for k, c in dk_product(n, i, j).items()]

    K = dk_index(n, 1, 0, 0, 0)
    Kb = dk_index(n, 0, 1, 0, 0)
    xs = [dk_index(n, 0, 0, 1 << i, 0) for i in range(n)]
    ys = [dk_index(n, 0, 0, 0, 1 << i) for i in range(n)]
    gid = {("K",): K, ("Kb",): Kb}
    for i in range(n):
        gid[("x", i)] = xs[i]
        gid[("y", i)] = ys[i]
    words = [[gid[g] for g in dk_word(n, idx)] for idx in range(d)]
    gen_comult = {K: {(K, K): one}, Kb: {(Kb, Kb): one}}
    gen_counit = {K: 1, Kb: 1}
    gen_antipode = {K: {K: one}, Kb: {Kb: one}}
    for i in range(n):
        gen_comult[xs[i]] = {(K, xs[i]): one, (xs[i], 0): one}
        gen_comult[ys[i]] = {(Kb, ys[i]): one, (ys[i], 0): one}
        gen_counit[xs[i]] = 0
        gen_counit[ys[i]] = 0
        gen_antipode[xs[i]] = {k: F.from_int(-c) for k, c in dk_product(n, K, xs[i]).items()}
        gen_antipode[ys[i]] = {k: F.from_int(-c) for k, c in dk_product(n, Kb, ys[i]).items()}
    return hopf_from_generators(F, labels, rule, 0, words, gen_comult, gen_counit,
                                gen_antipode, name=f"DK_{n}")


# -- R-matrices and ribbon elements -----------------------------------------


def _floor_sign(k: int) -> int:
    return -1 if (k // 2) % 2 else 1


def dk_r_matrix(H: HopfAlgebra, n: int) -> dict:
    """R = sum_w (-1)^floor(|w|/2) (w (x) wb Kb^|w|) Z on DK_n."""
    F = H.F
    half = F.from_fraction(Fraction(1, 2))
    K = dk_index(n, 1, 0, 0, 0)
    Kb = dk_index(n, 0, 1, 0, 0)
    Z = {(0, 0): half, (K, 0): half, (0, Kb): half, (K, Kb): -half}
    pre: dict = {}
    for S in range(1 << n):
        k = popcount(S)
        right = {dk_index(n, 0, 0, 0, S): F.one}
        if k % 2:
            right = H.mul(right, {Kb: F.one})
        for b, c in right.items():
            pre[(dk_index(n, 0, 0, S, 0), b)] = c * _floor_sign(k)
    return H.tmul(pre, Z)


def dk_ribbon_element(H: HopfAlgebra, n: int) -> dict:
    """(1 + K - Kb + K Kb) sum_w (-1)^floor((|w|+1)/2)/2 w wb (valid for even n)."""
    F = H.F
    pref = {dk_index(n, a, b, 0, 0): F.from_int(-1 if (b and not a) else 1)
            for a in (0, 1) for b in (0, 1)}
    s: dict = {}
    for S in range(1 << n):
        s[dk_index(n, 0, 0, S, S)] = F.from_fraction(Fraction(_floor_sign(popcount(S) + 1), 2))
    return H.mul(pref, s)


def kn_quotient(n: int, idx_dk: int) -> tuple[int, int]:
    """Image of a DK_n normal word in K_2n under K, Kb -> K, xib_i -> xi_(i+n); returns (index, sign)."""
    a, b, S, T = dk_unpack(n, idx_dk)
    # xi_S xi_(T+n) is already ascending in K_2n
    return kn_index(2 * n, (a + b) % 2, S | (T << n)), 1


def kn_r_matrix(H2n: HopfAlgebra, n: int) -> dict:
    """R on K_2n induced from the DK_n R-matrix by the quotient K = Kb."""
    F = H2n.F
    half = F.from_fraction(Fraction(1, 2))
    K = kn_index(2 * n, 1, 0)
    Z = {(0, 0): half, (K, 0): half, (0, K): half, (K, K): -half}
    pre: dict = {}
    for S in range(1 << n):
        k = popcount(S)
        right = {kn_index(2 * n, 0, S << n): F.one}
        if k % 2:
            right = H2n.mul(right, {K: F.one})
        for b, c in right.items():
            pre[(kn_index(2 * n, 0, S), b)] = c * _floor_sign(k)
    return H2n.tmul(pre, Z)


def kn_ribbon_element(H2n: HopfAlgebra, n: int) -> dict:
    """sum_w (-1)^floor((|w|+1)/2) w pi(wb) on K_2n."""
    F = H2n.F
    return {kn_index(2 * n, 0, S | (S << n)): F.from_int(_floor_sign(popcount(S) + 1))
            for S in range(1 << n)}
