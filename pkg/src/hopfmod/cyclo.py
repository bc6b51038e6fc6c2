"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis ``1, z, ..., z**(phi-1)`` reduced
modulo the N-th cyclotomic polynomial, with integer numerators over a common
positive denominator. The representation is canonical, so equality and
hashing are coefficient-wise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath

from ._accel import kernels as _k

__all__ = [
    "CyclotomicField",
    "Cyc",
    "ConductorMismatch",
    "field",
    "embed",
    "sqrt_integer",
    "approx",
    "scalar",
    "minimal_sqrt_conductor",
]


class ConductorMismatch(ValueError):
    pass


def _cyclotomic_coeffs(n: int) -> list[int]:
    from sympy import Poly, Symbol, cyclotomic_poly

    x = Symbol("x")
    p = Poly(cyclotomic_poly(n, x), x)
    return [int(c) for c in reversed(p.all_coeffs())]


class CyclotomicField:
    """Reduction data for Q(zeta_N); obtain instances through :func:`field`."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("conductor must be positive")
        self.N = n
        poly = _cyclotomic_coeffs(n)
        self.phi = phi = len(poly) - 1
        # x**k mod poly for 0 <= k < max(N, 2*phi-1), as dense int lists
        top = max(n, 2 * phi - 1)
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(top):
            powers.append(tuple(cur))
            # multiply by x
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for i in range(phi):
                    cur[i] -= carry * poly[i]
        self._powers = powers
        self.red = [
            [(i, c) for i, c in enumerate(powers[k]) if c] for k in range(phi, 2 * phi - 1)
        ]
        self._zero = (0,) * phi
        self.zero = Cyc(self, self._zero, 1)
        self.one = self.from_int(1)

    def __repr__(self):
        return f"CyclotomicField({self.N})"

    def __reduce__(self):
        return (field, (self.N,))

    def from_int(self, v: int) -> "Cyc":
        c = [0] * self.phi
        c[0] = int(v)
        return Cyc(self, tuple(c), 1)

    def from_fraction(self, v) -> "Cyc":
        v = Fraction(v)
        c = [0] * self.phi
        c[0] = v.numerator
        return Cyc(self, tuple(c), v.denominator)

    def zeta(self, k: int = 1) -> "Cyc":
        """``zeta_N ** k`` for any integer k."""
        return Cyc(self, self._powers[k % self.N], 1)

    def root_of_unity(self, num: int, den: int) -> "Cyc":
        """``exp(2*pi*i*num/den)``; requires den | N."""
        num, den = Fraction(num, den).numerator, Fraction(num, den).denominator
        if self.N % den:
            raise ConductorMismatch(f"zeta_{den} not in Q(zeta_{self.N})")
        return self.zeta(num * (self.N // den))

    def coerce(self, v) -> "Cyc":
        if isinstance(v, Cyc):
            if v.F is self:
                return v
            if v.F.N == 1 or v.is_rational():
                return self.from_fraction(v.to_fraction())
            if self.N % v.F.N == 0:
                return embed(v, self.N)
            raise ConductorMismatch(f"cannot combine conductors {v.F.N} and {self.N}")
        if isinstance(v, int):
            return self.from_int(v)
        if isinstance(v, (Fraction, Rational)):
            return self.from_fraction(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to a cyclotomic scalar")

    def element(self, coeffs) -> "Cyc":
        """Build from rational power-basis coefficients (length <= N, reduced here)."""
        num = [0] * self.phi
        den = 1
        fr = [Fraction(c) for c in coeffs]
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        for k, c in enumerate(fr):
            if c:
                v = c.numerator * (den // c.denominator)
                for i, p in enumerate(self._powers[k % self.N]):
                    if p:
                        num[i] += v * p
        c, d = _k.normalize(num, den)
        return Cyc(self, c, d)


@lru_cache(maxsize=None)
def field(n: int) -> CyclotomicField:
    return CyclotomicField(n)


class Cyc:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("F", "c", "d", "_h")

    def __init__(self, F: CyclotomicField, c: tuple, d: int):
        self.F = F
        self.c = c
        self.d = d
        self._h = None

    # -- coercion helpers
    def _other(self, o):
        if isinstance(o, Cyc):
            if o.F is self.F:
                return o
            if o.F.N == 1 or o.is_rational():
                return self.F.from_fraction(o.to_fraction())
            if self.is_rational():
                return None  # caller switches to o's field
            raise ConductorMismatch(
                f"conductor mismatch: {self.F.N} vs {o.F.N}; embed explicitly"
            )
        if isinstance(o, int):
            return self.F.from_int(o)
        if isinstance(o, Fraction):
            return self.F.from_fraction(o)
        return NotImplemented

    def __add__(self, o):
        b = self._other(o)
        if b is NotImplemented:
            return b
        if b is None:
            return o.F.coerce(self) + o
        c, d = _k.cadd(self.c, self.d, b.c, b.d)
        return Cyc(self.F, c, d)

    __radd__ = __add__

    def __sub__(self, o):
        b = self._other(o)
        if b is NotImplemented:
            return b
        if b is None:
            return o.F.coerce(self) - o
        c, d = _k.csub(self.c, self.d, b.c, b.d)
        return Cyc(self.F, c, d)

    def __rsub__(self, o):
        b = self._other(o)
        if b is NotImplemented:
            return b
        if b is None:
            return o - o.F.coerce(self)
        c, d = _k.csub(b.c, b.d, self.c, self.d)
        return Cyc(self.F, c, d)

    def __mul__(self, o):
        if isinstance(o, int):
            if o == 0:
                return self.F.zero
            c, d = _k.normalize([x * o for x in self.c], self.d)
            return Cyc(self.F, c, d)
        b = self._other(o)
        if b is NotImplemented:
            return b
        if b is None:
            return o.F.coerce(self) * o
        F = self.F
        c, d = _k.cmul(self.c, self.d, b.c, b.d, F.phi, F.red)
        return Cyc(F, c, d)

    __rmul__ = __mul__

    def __neg__(self):
        return Cyc(self.F, tuple(-x for x in self.c), self.d)

    def __pos__(self):
        return self

    def __truediv__(self, o):
        b = self._other(o)
        if b is NotImplemented:
            return b
        if b is None:
            return o.F.coerce(self) / o
        return self * b.inverse()

    def __rtruediv__(self, o):
        b = self._other(o)
        if b is NotImplemented:
            return b
        if b is None:
            return o / o.F.coerce(self)
        return b * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.F.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, o):
        if isinstance(o, Cyc):
            if o.F is self.F:
                return self.c == o.c and self.d == o.d
            if self.is_rational() and o.is_rational():
                return self.to_fraction() == o.to_fraction()
            M = math.lcm(self.F.N, o.F.N)
            return embed(self, M) == embed(o, M)
        if isinstance(o, (int, Fraction)):
            return self.is_rational() and self.to_fraction() == o
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            if self.is_rational():
                self._h = hash(self.to_fraction())
            else:
                self._h = hash((self.F.N, self.c, self.d))
        return self._h

    def __bool__(self):
        return any(self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def is_one(self) -> bool:
        return self.d == 1 and self.c[0] == 1 and not any(self.c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self.c[0], self.d)

    @property
    def conductor(self) -> int:
        return self.F.N

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(x, self.d) for x in self.c]

    def galois(self, k: int) -> "Cyc":
        """Apply the automorphism zeta -> zeta**k (k coprime to N)."""
        F = self.F
        if math.gcd(k, F.N) != 1:
            raise ValueError("Galois exponent must be coprime to the conductor")
        num = [0] * F.phi
        for j, x in enumerate(self.c):
            if x:
                for i, p in enumerate(F._powers[(j * k) % F.N]):
                    if p:
                        num[i] += x * p
        c, d = _k.normalize(num, self.d)
        return Cyc(F, c, d)

    def conj(self) -> "Cyc":
        return self.galois(-1)

    def norm(self) -> Fraction:
        F = self.F
        prod = self
        for k in range(2, F.N):
            if math.gcd(k, F.N) == 1:
                prod = prod * self.galois(k)
        return prod.to_fraction()

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_N)")
        c, d = _inverse(self.F.N, self.c, self.d)
        return Cyc(self.F, c, d)

    def approx(self, digits: int = 15) -> tuple[float, float]:
        return approx(self, digits)

    def __complex__(self):
        re, im = approx(self, 17)
        return complex(re, im)

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.to_fraction()})"
        terms = []
        for k, x in enumerate(self.c):
            if x:
                fr = Fraction(x, self.d)
                terms.append(f"{fr}*z^{k}" if k else f"{fr}")
        return f"Cyc[N={self.F.N}](" + " + ".join(terms) + ")"

    def to_json(self) -> dict:
        return {"conductor": self.F.N, "coeffs": [[x, self.d] for x in self.c]}

    @staticmethod
    def from_json(obj: dict) -> "Cyc":
        F = field(int(obj["conductor"]))
        fr = [Fraction(int(a), int(b)) for a, b in obj["coeffs"]]
        if len(fr) != F.phi:
            raise ValueError("coefficient vector length must equal phi(N)")
        return F.element(fr)


@lru_cache(maxsize=65536)
def _inverse(n: int, c: tuple, d: int) -> tuple:
    F = field(n)
    a = Cyc(F, c, d)
    if a.is_rational():
        r = F.from_fraction(1 / a.to_fraction())
        return r.c, r.d
    # product of the nontrivial conjugates, divided by the norm
    prod = F.one
    for k in range(2, F.N):
        if math.gcd(k, F.N) == 1:
            prod = prod * a.galois(k)
    nrm = (a * prod).to_fraction()
    r = prod * F.from_fraction(1 / nrm)
    return r.c, r.d


def scalar(v, F: CyclotomicField) -> Cyc:
    return F.coerce(v)


def embed(a: Cyc, M: int) -> Cyc:
    """Re-express ``a`` in Q(zeta_M); requires conductor(a) | M."""
    N = a.F.N
    if M % N:
        raise ConductorMismatch(f"conductor {N} does not divide {M}")
    G = field(M)
    if G is a.F:
        return a
    s = M // N
    num = [0] * G.phi
    for j, x in enumerate(a.c):
        if x:
            for i, p in enumerate(G._powers[(j * s) % M]):
                if p:
                    num[i] += x * p
    c, d = _k.normalize(num, a.d)
    return Cyc(G, c, d)


def restrict(a: Cyc, n: int) -> Cyc | None:
    """Express ``a`` in Q(zeta_n) (n | conductor) or return None if it is not there."""
    M = a.F.N
    if M % n:
        raise ConductorMismatch(f"{n} does not divide conductor {M}")
    # fixed field test: a is in Q(zeta_n) iff fixed by all k = 1 mod n
    for k in range(1, M):
        if math.gcd(k, M) == 1 and k % n == 1 % n and k != 1:
            if a.galois(k) != a:
                return None
    small = field(n)
    cols = [embed(small.zeta(j), M) for j in range(small.phi)]
    # solve sum x_j cols_j = a over Q
    rows = []
    for i in range(a.F.phi):
        rows.append([Fraction(col.c[i], col.d) for col in cols] + [Fraction(a.c[i], a.d)])
    sol = _solve_rational(rows, small.phi)
    if sol is None:
        return None
    return small.element(sol)


def _solve_rational(rows, nvars):
    rows = [r[:] for r in rows]
    piv = []
    r = 0
    for col in range(nvars):
        p = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv.append(col)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][nvars]:
            return None
    sol = [Fraction(0)] * nvars
    for i, col in enumerate(piv):
        sol[col] = rows[i][nvars]
    return sol


def _squarefree_split(n: int) -> tuple[int, int]:
    """Return (a, b) with n = a*a*b and b squarefree."""
    a, b = 1, 1
    m = n
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        a *= p ** (e // 2)
        if e % 2:
            b *= p
        p += 1
    b *= m
    return a, b


def _primes(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def minimal_sqrt_conductor(l: int) -> int:
    """Smallest N with sqrt(l) in Q(zeta_N) (the conductor of Q(sqrt(l)))."""
    _, b = _squarefree_split(l)
    if b == 1:
        return 1
    return b if b % 4 == 1 else 4 * b


def sqrt_integer(l: int, N: int) -> Cyc:
    """Exact positive square root of the positive integer ``l`` inside Q(zeta_N)."""
    if l < 1:
        raise ValueError("l must be a positive integer")
    F = field(N)
    a, b = _squarefree_split(l)
    need = minimal_sqrt_conductor(l)
    if N % need:
        raise ConductorMismatch(
            f"sqrt({l}) needs a conductor divisible by {need}; got {N}"
        )
    root = F.from_int(a)
    if b == 1:
        return root
    odd = b // 2 if b % 2 == 0 else b
    if b % 2 == 0:
        z8 = F.root_of_unity(1, 8)
        root = root * (z8 + z8.inverse())
    k3 = 0
    for p in _primes(odd):
        zp = [F.root_of_unity(t * t, p) for t in range(p)]
        g = F.zero
        for z in zp:
            g = g + z
        root = root * g
        if p % 4 == 3:
            k3 += 1
    # each p = 3 mod 4 contributed a factor i
    if k3 % 4 == 2:
        root = -root
    elif k3 % 4 == 1:
        root = root * F.root_of_unity(-1, 4)
    elif k3 % 4 == 3:
        root = root * F.root_of_unity(1, 4)
    if root * root != F.from_int(l):
        raise ArithmeticError("square root construction failed")
    re, _ = approx(root, 15)
    if re < 0:
        root = -root
    return root


def approx(a: Cyc, digits: int = 15) -> tuple[float, float]:
    """Numeric value under zeta_N -> exp(2*pi*i/N)."""
    s = approx_mp(a, digits)
    return float(s.real), float(s.imag)


def approx_mp(a: Cyc, digits: int = 15):
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with mpmath.workdps(digits + 10):
        acc = mpmath.mpc(0)
        N = a.F.N
        for k, x in enumerate(a.c):
            if x:
                acc += x * mpmath.expjpi(mpmath.mpf(2 * k) / N)
        return acc / a.d


def approx_str(a: Cyc, digits: int = 15) -> tuple[str, str]:
    s = approx_mp(a, digits)
    with mpmath.workdps(digits + 10):
        return mpmath.nstr(s.real, digits), mpmath.nstr(s.imag, digits)
