"""Small quantum group U_q sl(2) at an odd root of unity, PBW basis F^m E^n K^k."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..cyclo import Cyc, CyclotomicField, field
from ..hopf import HopfAlgebra
from ._build import hopf_from_generators


class QNumbers:
    """q = zeta_l and the derived quantum integers, factorials and binomials."""

    def __init__(self, l: int, F: CyclotomicField):
        self.l = l
        self.F = F
        self.q = F.root_of_unity(1, l)
        self._pow = [self.q ** k for k in range(l)]
        self.qdiff = self.q - self.q.inverse()
        self.int = [self._qint(m) for m in range(l + 1)]
        fact = [F.one]
        for m in range(1, l):
            fact.append(fact[-1] * self.int[m])
        self.fact = fact

    def qpow(self, e: int) -> Cyc:
        return self._pow[e % self.l]

    def qhalf(self, e: int) -> Cyc:
        """q^(e/2) with q^(1/2) = zeta_(2l)."""
        return self.F.root_of_unity(e, 2 * self.l)

    def qroot(self, e: int) -> Cyc:
        """q^(e/2) using the square root q^((l+1)/2) of q that is itself an l-th root of unity."""
        return self.qpow(e * (self.l + 1) // 2)

    def _qint(self, m: int) -> Cyc:
        return (self.qpow(m) - self.qpow(-m)) / self.qdiff

    def binom(self, m: int, r: int) -> Cyc:
        if r < 0 or r > m:
            return self.F.zero
        return self.fact[m] / (self.fact[r] * self.fact[m - r])


def pbw_index(l: int, m: int, n: int, k: int) -> int:
    return (m * l + n) * l + (k % l)


def pbw_unpack(l: int, idx: int) -> tuple[int, int, int]:
    mn, k = divmod(idx, l)
    m, n = divmod(mn, l)
    return m, n, k


def pbw_label(l: int, idx: int) -> str:
    m, n, k = pbw_unpack(l, idx)
    parts = []
    if m:
        parts.append("F" if m == 1 else f"F^{m}")
    if n:
        parts.append("E" if n == 1 else f"E^{n}")
    if k:
        parts.append("K" if k == 1 else f"K^{k}")
    return "".join(parts) or "1"


def default_conductor(l: int) -> int:
    return 8 * l


def _rmul_gen(l: int, qn: QNumbers, state: dict, g: str) -> dict:
    """Right-multiply a PBW combination by one of the generators F, E, K."""
    out: dict = {}

    def add(key, c):
        o = out.get(key)
        v = c if o is None else o + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    for idx, c in state.items():
        m, n, k = pbw_unpack(l, idx)
        if g == "K":
            add(pbw_index(l, m, n, k + 1), c)
        elif g == "E":
            # K^k E = q^(2k) E K^k
            if n + 1 < l:
                add(pbw_index(l, m, n + 1, k), c * qn.qpow(2 * k))
        else:
            # K^k F = q^(-2k) F K^k, E^n F = F E^n + [n]/(q-q^-1) E^(n-1)(q^(n-1)K - q^(1-n)K^-1)
            c2 = c * qn.qpow(-2 * k)
            if m + 1 < l:
                add(pbw_index(l, m + 1, n, k), c2)
            if n:
                f = c2 * qn.int[n] / qn.qdiff
                add(pbw_index(l, m, n - 1, k + 1), f * qn.qpow(n - 1))
                add(pbw_index(l, m, n - 1, k - 1), -f * qn.qpow(1 - n))
    return out


def pbw_word(l: int, idx: int) -> list[str]:
    m, n, k = pbw_unpack(l, idx)
    return ["F"] * m + ["E"] * n + ["K"] * k


def comult_formula(l: int, qn: QNumbers, idx: int) -> dict:
    """Closed q-binomial expansion of Delta(F^m E^n K^k)."""
    m, n, k = pbw_unpack(l, idx)
    out: dict = {}
    for r in range(m + 1):
        for s in range(n + 1):
            e = 2 * (n - s) * (r - m) + r * (m - r) + s * (n - s)
            c = qn.qpow(e) * qn.binom(m, r) * qn.binom(n, s)
            key = (pbw_index(l, r, n - s, r - m + k), pbw_index(l, m - r, s, n - s + k))
            o = out.get(key)
            out[key] = c if o is None else o + c
    return {k2: v for k2, v in out.items() if v}


@lru_cache(maxsize=None)
def uqsl2_algebra(l: int, conductor: int | None = None) -> HopfAlgebra:
    if l < 3 or l % 2 == 0:
        raise ValueError("parameter must be odd and >= 3")
    N = conductor or default_conductor(l)
    if N % (2 * l):
        raise ValueError(f"conductor must be a multiple of {2 * l}")
    F = field(N)
    qn = QNumbers(l, F)
    d = l ** 3
    labels = [pbw_label(l, i) for i in range(d)]
    holder: dict = {}

    def rule(i, j):
        w = pbw_word(l, j)
        if not w:
            return {i: F.one}.items()
        # reuse the memoized product with the word prefix
        H = holder["H"]
        prefix = _prefix_of(l, j)
        state = dict(H.prod(i, prefix))
        return _rmul_gen(l, qn, state, w[-1]).items()

    E = pbw_index(l, 0, 1, 0)
    Fi = pbw_index(l, 1, 0, 0)
    K = pbw_index(l, 0, 0, 1)
    Kinv = pbw_index(l, 0, 0, l - 1)
    gid = {"E": E, "F": Fi, "K": K}
    words = [[gid[g] for g in pbw_word(l, idx)] for idx in range(d)]
    one = F.one
    gen_comult = {
        E: {(0, E): one, (E, K): one},
        Fi: {(Kinv, Fi): one, (Fi, 0): one},
        K: {(K, K): one},
    }
    gen_counit = {E: 0, Fi: 0, K: 1}
    # S(E) = -E K^-1, S(F) = -K F, S(K) = K^-1
    gen_antipode = {
        E: {pbw_index(l, 0, 1, l - 1): -one},
        Fi: {k: -v for k, v in _rmul_gen(l, qn, {K: one}, "F").items()},
        K: {Kinv: one},
    }
    H = hopf_from_generators(
        F, labels, rule, 0, words, gen_comult, gen_counit, gen_antipode,
        comult_override=lambda b: comult_formula(l, qn, b), name=f"U_q sl2(l={l})",
        bind=lambda h: holder.__setitem__("H", h),
    )
    H.qnumbers = qn
    H.l = l
    return H


def _prefix_of(l: int, idx: int) -> int:
    m, n, k = pbw_unpack(l, idx)
    if k:
        return pbw_index(l, m, n, k - 1)
    if n:
        return pbw_index(l, m, n - 1, 0)
    return pbw_index(l, m - 1, 0, 0)


def uqsl2_r_matrix(H: HopfAlgebra) -> dict:
    """Universal R as a sum over E^m K^i (x) F^m K^j."""
    l, qn, F = H.l, H.qnumbers, H.F
    inv_l = F.from_fraction(Fraction(1, l))
    out: dict = {}
    for m in range(l):
        cm = qn.qdiff ** m / qn.fact[m] * inv_l
        for i in range(l):
            for j in range(l):
                e = m * (m - 1) // 2 + 2 * m * (i - j) - 2 * i * j
                out[(pbw_index(l, 0, m, i), pbw_index(l, m, 0, j))] = cm * qn.qpow(e)
    return out


def uqsl2_ribbon_element(H: HopfAlgebra) -> dict:
    l, qn, F = H.l, H.qnumbers, H.F
    h = (l - 1) // 2
    gauss = F.zero
    for r in range(l):
        gauss = gauss + qn.qpow(h * r * r)
    pref = gauss / l
    out: dict = {}
    for m in range(l):
        cm = qn.qdiff ** m / qn.fact[m] * pref * (-1) ** m
        for j in range(l):
            # the half powers must be periodic in j mod l, which pins the root of q
            out[pbw_index(l, m, m, j)] = cm * qn.qroot(-m + 2 * m * j + (j + 1) ** 2)
    return out


def uqsl2_drinfeld_q(H: HopfAlgebra) -> dict:
    """Closed form of R21 R summed over F^m E^n K^j (x) E^m F^n K^i."""
    l, qn, F = H.l, H.qnumbers, H.F
    inv_l = F.from_fraction(Fraction(1, l))
    out: dict = {}
    for m in range(l):
        for n in range(l):
            cmn = qn.qdiff ** (m + n) / (qn.fact[m] * qn.fact[n]) * inv_l
            for i in range(l):
                for j in range(l):
                    e = (m * (m - 1) // 2 + n * (n - 1) // 2 - m * m - m * j + m * i
                         + 2 * n * j - 2 * n * i - i * j)
                    left = {pbw_index(l, m, n, j): F.one}
                    # E^m F^n K^i is not in PBW order; straighten it
                    right = H.mul_many({pbw_index(l, 0, m, 0): F.one},
                                       {pbw_index(l, n, 0, i): F.one})
                    c = cmn * qn.qpow(e)
                    for a, x in left.items():
                        for b, y in right.items():
                            key = (a, b)
                            v = out.get(key)
                            out[key] = c * x * y if v is None else v + c * x * y
    return {k: v for k, v in out.items() if v}
