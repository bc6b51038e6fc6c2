"""Pure-Python kernels for power-basis arithmetic in Q(zeta_N).

A scalar is a pair ``(c, d)``: ``c`` a tuple of ``phi`` integers and ``d`` a
positive integer, with ``gcd(d, *c) == 1``. ``red`` is the reduction table:
``red[k - phi]`` lists ``(index, coef)`` pairs expressing ``x**k`` modulo the
cyclotomic polynomial, for ``phi <= k <= 2*phi - 2``.

The compiled module ``_kernels`` exposes the same functions.
"""

from math import gcd


def normalize(c, d):
    g = gcd(d, *c)
    if g == 1:
        return tuple(c), d
    if g == 0:
        return (0,) * len(c), 1
    return tuple(x // g for x in c), d // g


def mul_reduce(a, b, phi, red):
    out = [0] * (2 * phi - 1)
    nb = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if x:
            for j, y in nb:
                out[i + j] += x * y
    for k in range(phi, 2 * phi - 1):
        v = out[k]
        if v:
            for idx, coef in red[k - phi]:
                out[idx] += v * coef
    del out[phi:]
    return out


def cmul(ac, ad, bc, bd, phi, red):
    return normalize(mul_reduce(ac, bc, phi, red), ad * bd)


def cadd(ac, ad, bc, bd):
    if ad == bd:
        return normalize([x + y for x, y in zip(ac, bc)], ad)
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    return normalize([x * fa + y * fb for x, y in zip(ac, bc)], ad * fa)


def csub(ac, ad, bc, bd):
    if ad == bd:
        return normalize([x - y for x, y in zip(ac, bc)], ad)
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    return normalize([x * fa - y * fb for x, y in zip(ac, bc)], ad * fa)


def cfma(acc_c, acc_d, ac, ad, bc, bd, phi, red):
    """Return ``acc + a*b``."""
    p = mul_reduce(ac, bc, phi, red)
    pd = ad * bd
    if acc_d == pd:
        return normalize([x + y for x, y in zip(acc_c, p)], pd)
    g = gcd(acc_d, pd)
    fa = pd // g
    fb = acc_d // g
    return normalize([x * fa + y * fb for x, y in zip(acc_c, p)], acc_d * fa)
