# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for power-basis arithmetic in Q(zeta_N).

Same contract as ``_kernels_py``. Coefficients stay Python integers, so no
fixed-width overflow is possible; the gain comes from typed loops.
"""

from math import gcd


cpdef tuple normalize(c, d):
    cdef Py_ssize_t i, n
    g = gcd(d, *c)
    if g == 1:
        return tuple(c), d
    n = len(c)
    if g == 0:
        return (0,) * n, 1
    return tuple([c[i] // g for i in range(n)]), d // g


cpdef list mul_reduce(tuple a, tuple b, Py_ssize_t phi, list red):
    cdef Py_ssize_t i, j, k, nnz = 0
    cdef list out = [0] * (2 * phi - 1)
    cdef list bj = []
    cdef list bv = []
    cdef object x, v
    for j in range(phi):
        if b[j]:
            bj.append(j)
            bv.append(b[j])
            nnz += 1
    for i in range(phi):
        x = a[i]
        if x:
            for k in range(nnz):
                j = <Py_ssize_t>bj[k]
                out[i + j] = out[i + j] + x * bv[k]
    for k in range(phi, 2 * phi - 1):
        v = out[k]
        if v:
            for idx, coef in red[k - phi]:
                out[idx] = out[idx] + v * coef
    del out[phi:]
    return out


cpdef tuple cmul(tuple ac, ad, tuple bc, bd, Py_ssize_t phi, list red):
    return normalize(mul_reduce(ac, bc, phi, red), ad * bd)


cpdef tuple cadd(tuple ac, ad, tuple bc, bd):
    cdef Py_ssize_t i, n = len(ac)
    if ad == bd:
        return normalize([ac[i] + bc[i] for i in range(n)], ad)
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    return normalize([ac[i] * fa + bc[i] * fb for i in range(n)], ad * fa)


cpdef tuple csub(tuple ac, ad, tuple bc, bd):
    cdef Py_ssize_t i, n = len(ac)
    if ad == bd:
        return normalize([ac[i] - bc[i] for i in range(n)], ad)
    g = gcd(ad, bd)
    fa = bd // g
    fb = ad // g
    return normalize([ac[i] * fa - bc[i] * fb for i in range(n)], ad * fa)


cpdef tuple cfma(tuple acc_c, acc_d, tuple ac, ad, tuple bc, bd, Py_ssize_t phi, list red):
    cdef Py_ssize_t i
    cdef list p = mul_reduce(ac, bc, phi, red)
    pd = ad * bd
    if acc_d == pd:
        return normalize([acc_c[i] + p[i] for i in range(phi)], pd)
    g = gcd(acc_d, pd)
    fa = pd // g
    fb = acc_d // g
    return normalize([acc_c[i] * fa + p[i] * fb for i in range(phi)], acc_d * fa)
