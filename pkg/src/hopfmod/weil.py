"""Quadratic modules on cyclic groups, Gauss sums, Weil representations,
pointed modular data, the even/odd split and congruence certificates."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction
from math import gcd

from . import linalg
from .cyclo import Cyc, CyclotomicField, field
from .modular import (Equivalence, common_field, lift, matrix_order, sl2z_equivalence,
                      verify_modular_identities)

Matrix = list


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class QuadraticModule:
    """Z/m with Q(a) = c a^2 mod 1."""

    m: int
    c: Fraction

    def __post_init__(self):
        c = Fraction(self.c)
        object.__setattr__(self, "c", c)
        if self.m < 1:
            raise ValueError("modulus must be positive")
        if (2 * c * self.m).denominator != 1 or (c * self.m * self.m).denominator != 1:
            raise ValueError(f"Q(a) = {c} a^2 is not well defined on Z/{self.m}")

    def Q(self, a: int) -> Fraction:
        v = self.c * a * a
        return v - (v.numerator // v.denominator)

    def B(self, x: int, y: int) -> Fraction:
        v = self.Q(x + y) - self.Q(x) - self.Q(y)
        return v - (v.numerator // v.denominator)

    @property
    def conductor(self) -> int:
        N = 1
        for a in range(self.m):
            N = _lcm(N, self.Q(a).denominator)
            for b in range(self.m):
                N = _lcm(N, self.B(a, b).denominator)
        return N

    def is_quadratic(self) -> bool:
        """Q(-x) = Q(x) and B bilinear (checked exhaustively)."""
        m = self.m
        if any(self.Q(-x) != self.Q(x) for x in range(m)):
            return False
        for x in range(m):
            for y in range(m):
                for z in range(m):
                    if (self.B(x + y, z) - self.B(x, z) - self.B(y, z)).denominator != 1:
                        return False
        return True

    def is_nondegenerate(self) -> bool:
        return all(any(self.B(x, y) for y in range(self.m)) for x in range(1, self.m))

    def field(self, N: int | None = None) -> CyclotomicField:
        base = self.conductor
        return field(_lcm(N, base) if N else base)

    def e(self, v: Fraction, F: CyclotomicField) -> Cyc:
        """exp(2 pi i v) in F."""
        return F.root_of_unity(v.numerator, v.denominator)


def gauss_sum(M: QuadraticModule, F: CyclotomicField | None = None) -> Cyc:
    F = F or M.field()
    s = F.zero
    for a in range(M.m):
        s = s + M.e(M.Q(a), F)
    return s


@dataclass
class WeilRep:
    module: QuadraticModule
    S: Matrix
    T: Matrix
    F: CyclotomicField

    @property
    def dim(self) -> int:
        return len(self.T)


def pointed_modular_data(M: QuadraticModule, F: CyclotomicField | None = None) -> WeilRep:
    """S_xy = exp(-2 pi i B(x, y)), T = diag(exp(2 pi i Q(x)))."""
    F = F or M.field()
    m = M.m
    S = [[M.e(-M.B(x, y), F) for y in range(m)] for x in range(m)]
    T = [[M.e(M.Q(x), F) if x == y else F.zero for y in range(m)] for x in range(m)]
    return WeilRep(M, S, T, F)


def weil_rep(M: QuadraticModule, F: CyclotomicField | None = None) -> WeilRep:
    """t f(x) = e(Q(x)) f(x) and s^-1 f(x) = tau/|M| sum_y e(B(x, y)) f(y)."""
    if not M.is_nondegenerate():
        raise ValueError("Weil representation needs a non-degenerate quadratic form")
    F = F or M.field()
    m = M.m
    tau = gauss_sum(M, F)
    coef = tau / F.from_int(m)
    Sinv = [[coef * M.e(M.B(x, y), F) for y in range(m)] for x in range(m)]
    S = linalg.inverse(Sinv, F)
    T = pointed_modular_data(M, F).T
    return WeilRep(M, S, T, F)


# -- the even/odd split for Z/l -------------------------------------------------------


@dataclass
class EvenOddSplit:
    l: int
    S_even: Matrix
    T_even: Matrix
    S_odd: Matrix
    T_odd: Matrix
    P: Matrix
    blocks_zero: bool
    F: CyclotomicField


def uqsl2_pointed_module(l: int) -> QuadraticModule:
    """(Z/l, Q(a) = -h a^2 / l) with l = 2h + 1, so that B(a, b) = ab/l."""
    if l < 3 or l % 2 == 0:
        raise ValueError("parameter must be odd and >= 3")
    h = (l - 1) // 2
    return QuadraticModule(l, Fraction(-h, l))


def even_odd_split(l: int, F: CyclotomicField | None = None) -> EvenOddSplit:
    """Pointed data of Z/l in the basis w_0 = v_0, w_i^+- = (v_i +- v_(l-i))/2.

    S is taken as (q^(ab)), i.e. exp(+2 pi i B); this is the pointed S up to
    the relabelling a -> -a, which fixes T.
    """
    M = uqsl2_pointed_module(l)
    F = F or M.field()
    h = (l - 1) // 2
    S = [[M.e(M.B(a, b), F) for b in range(l)] for a in range(l)]
    T = pointed_modular_data(M, F).T
    half = F.from_fraction(Fraction(1, 2))
    cols = [[F.one if x == 0 else F.zero for x in range(l)]]
    for i in range(1, h + 1):
        cols.append([half if x in (i, l - i) else F.zero for x in range(l)])
    for i in range(1, h + 1):
        cols.append([half if x == i else (-half if x == l - i else F.zero) for x in range(l)])
    P = linalg.transpose(cols)
    Pinv = linalg.inverse(P, F)
    S2 = linalg.matmul(Pinv, linalg.matmul(S, P, F), F)
    T2 = linalg.matmul(Pinv, linalg.matmul(T, P, F), F)
    e = range(h + 1)
    o = range(h + 1, l)
    zero = all(not A[i][j] for A in (S2, T2) for i in range(l) for j in range(l)
               if (i <= h) != (j <= h))
    blk = lambda A, r: [[A[i][j] for j in r] for i in r]
    return EvenOddSplit(l, blk(S2, e), blk(T2, e), blk(S2, o), blk(T2, o), P, zero, F)


# -- standard pieces --------------------------------------------------------------------


@dataclass
class Piece:
    """A named projective SL(2, Z) representation with its congruence level (None if not congruence)."""

    name: str
    S: Matrix
    T: Matrix
    level: int | None

    @property
    def dim(self) -> int:
        return len(self.S)


def trivial_piece(F: CyclotomicField) -> Piece:
    return Piece("triv", [[F.one]], [[F.one]], 1)


def level2_piece(F: CyclotomicField) -> Piece:
    """N_1: the 2-dimensional irreducible of SL(2, Z/2) = S_3 over the rationals."""
    h = F.from_fraction(Fraction(1, 2))
    S = [[-h, F.from_fraction(Fraction(3, 2))], [h, h]]
    T = [[F.one, F.zero], [F.zero, -F.one]]
    return Piece("N1", S, T, 2)


def std_piece(F: CyclotomicField, power: int = 1) -> Piece:
    """(C^2_std)^(x power): s = [[0,-1],[1,0]], t = [[1,1],[0,1]]; t has infinite order."""
    S0 = [[F.zero, -F.one], [F.one, F.zero]]
    T0 = [[F.one, F.one], [F.zero, F.one]]
    S, T = [[F.one]], [[F.one]]
    for _ in range(power):
        S = linalg.kron(S, S0, F)
        T = linalg.kron(T, T0, F)
    name = "std" if power == 1 else f"std^{power}"
    return Piece(name, S, T, None)


def weil_piece(name: str, S: Matrix, T: Matrix, F: CyclotomicField) -> Piece:
    return Piece(name, S, T, matrix_order(T, F))


def direct_sum(pieces: list[Piece], F: CyclotomicField) -> tuple[Matrix, Matrix]:
    S = linalg.block_diag([lift(p.S, F) for p in pieces], F)
    T = linalg.block_diag([lift(p.T, F) for p in pieces], F)
    return S, T


@dataclass
class CongruenceCertificate:
    found: bool
    pieces: list[str] = dfield(default_factory=list)
    level: int | None = None
    ord_T: int | None = None
    equivalence: Equivalence | None = None

    @property
    def congruence(self) -> bool:
        return self.found and self.level is not None

    def to_json(self) -> dict:
        out = {"found": self.found, "pieces": self.pieces, "level": self.level,
               "ord_T": self.ord_T,
               "level_equals_ord_T": (self.level == self.ord_T) if self.found else None}
        if self.equivalence is not None:
            out["equivalence"] = self.equivalence.to_json()
        return out


def projective_order(T: Matrix, F: CyclotomicField, bound: int = 10000) -> int | None:
    """Least k with T^k a scalar matrix."""
    P = T
    n = len(T)
    for k in range(1, bound + 1):
        if linalg.is_diagonal(P) and all(P[i][i] == P[0][0] for i in range(n)):
            return k
        P = linalg.matmul(P, T, F)
    return None


def congruence_certify(S: Matrix, T: Matrix, candidates: list[list[Piece]]) -> CongruenceCertificate:
    """Try each candidate decomposition in turn; the level is the lcm of the piece levels.

    Failure over the candidate set is inconclusive, not a disproof.
    """
    F = common_field(S, T, *[p.S for c in candidates for p in c],
                     *[p.T for c in candidates for p in c])
    S, T = lift(S, F), lift(T, F)
    ordT = projective_order(T, F)
    for pieces in candidates:
        if sum(p.dim for p in pieces) != len(S):
            continue
        S2, T2 = direct_sum(pieces, F)
        eq = sl2z_equivalence(S, T, S2, T2)
        if eq.found:
            level = 1
            for p in pieces:
                level = None if level is None or p.level is None else _lcm(level, p.level)
            return CongruenceCertificate(True, [p.name for p in pieces], level, ordT, eq)
    return CongruenceCertificate(False, ord_T=ordT)


def check_projective_identities(S: Matrix, T: Matrix, F: CyclotomicField) -> bool:
    """S^4 scalar and (S T)^3 proportional to S^2."""
    S2 = linalg.matmul(S, S, F)
    S4 = linalg.matmul(S2, S2, F)
    n = len(S)
    scalar = linalg.is_diagonal(S4) and all(S4[i][i] == S4[0][0] for i in range(n))
    return scalar and verify_modular_identities(S, T, F).st_cubed_ok
