"""Exact sparse linear algebra over a cyclotomic field.

Sparse vectors are ``dict[int, Cyc]`` with no stored zeros. Dense matrices
are lists of rows of ``Cyc``. Every rank or nullspace decision is exact.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ._accel import kernels as _k
from .cyclo import Cyc, CyclotomicField

SparseVec = dict  # int -> Cyc
Matrix = list  # list[list[Cyc]]


class SingularMatrix(ArithmeticError):
    pass


def _axpy(dst: dict, f: Cyc, src: dict, F: CyclotomicField) -> None:
    """dst -= f * src, in place."""
    fc, fd = f.c, f.d
    phi, red = F.phi, F.red
    for k, v in src.items():
        pc, pd = _k.cmul(fc, fd, v.c, v.d, phi, red)
        old = dst.get(k)
        if old is None:
            dst[k] = Cyc(F, tuple(-x for x in pc), pd)
        else:
            c, d = _k.csub(old.c, old.d, pc, pd)
            if any(c):
                dst[k] = Cyc(F, c, d)
            else:
                del dst[k]


def _scale(v: dict, f: Cyc) -> dict:
    return {k: x * f for k, x in v.items()}


def _pivot_key(row: dict, col: int):
    p = row[col]
    return (len(row), 0 if p.is_rational() else 1)


def rref(rows: Iterable[dict], ncols: int, F: CyclotomicField, *, full: bool = True):
    """Reduced row echelon form.

    Returns ``(pivots, basis)`` where ``basis[i]`` has a 1 in column
    ``pivots[i]``; with ``full`` the pivot columns are cleared in all rows.
    """
    work: dict[int, dict] = {}
    where: dict[int, set] = {}
    for rid, r in enumerate(rows):
        r = {k: v for k, v in r.items() if v}
        if r:
            work[rid] = r
            for k in r:
                where.setdefault(k, set()).add(rid)
    pivots: list[int] = []
    prow: list[dict] = []
    for col in range(ncols):
        cand = where.get(col)
        if not cand:
            continue
        pid = min(cand, key=lambda i: _pivot_key(work[i], col))
        pr = work.pop(pid)
        for k in pr:
            where[k].discard(pid)
        inv = pr[col].inverse()
        if not inv.is_one():
            pr = _scale(pr, inv)
        for rid in list(where.get(col, ())):
            r = work[rid]
            before = set(r)
            _axpy(r, r[col], pr, F)
            after = set(r)
            for k in before - after:
                where[k].discard(rid)
            for k in after - before:
                where.setdefault(k, set()).add(rid)
            if not r:
                del work[rid]
        pivots.append(col)
        prow.append(pr)
    if full:
        for i in range(len(prow) - 1, -1, -1):
            c = pivots[i]
            for j in range(i):
                f = prow[j].get(c)
                if f is not None:
                    _axpy(prow[j], f, prow[i], F)
    return pivots, prow


def rank(rows: Iterable[dict], ncols: int, F: CyclotomicField) -> int:
    return len(rref(rows, ncols, F, full=False)[0])


def nullspace(rows: Iterable[dict], ncols: int, F: CyclotomicField) -> list[dict]:
    """Basis of {x : row . x = 0 for all rows}, one vector per free column."""
    pivots, prow = rref(rows, ncols, F)
    pset = set(pivots)
    out = []
    one = F.one
    for f in range(ncols):
        if f in pset:
            continue
        v = {f: one}
        for p, r in zip(pivots, prow):
            x = r.get(f)
            if x is not None:
                v[p] = -x
        out.append(v)
    return out


def span_basis(vectors: Iterable[dict], ncols: int, F: CyclotomicField) -> list[dict]:
    """Echelonized basis of the span of ``vectors``."""
    return rref(vectors, ncols, F)[1]


def in_span(v: dict, basis: Sequence[dict], ncols: int, F: CyclotomicField) -> bool:
    return rank(list(basis) + [v], ncols, F) == rank(basis, ncols, F)


def coordinates(v: dict, basis: Sequence[dict], F: CyclotomicField) -> list[Cyc] | None:
    """Coefficients c with sum c_i basis_i = v, or None if v is outside the span."""
    n = len(basis)
    # unknowns are the coefficients; equations indexed by support coordinates
    support = set(v)
    for b in basis:
        support |= set(b)
    idx = {k: i for i, k in enumerate(sorted(support))}
    rows = []
    for k, i in idx.items():
        row = {j: b[k] for j, b in enumerate(basis) if k in b}
        if k in v:
            row[n] = v[k]
        rows.append(row)
    sol = solve_augmented(rows, n, F)
    return sol


def solve_augmented(rows: list[dict], n: int, F: CyclotomicField) -> list[Cyc] | None:
    """Solve ``A x = b`` given rows with the right-hand side stored at column ``n``.

    Returns one solution (free variables zero) or None if inconsistent.
    """
    pivots, prow = rref(rows, n + 1, F)
    if pivots and pivots[-1] == n:
        return None
    x = [F.zero] * n
    for p, r in zip(pivots, prow):
        x[p] = r.get(n, F.zero)
    return x


# -- dense helpers -----------------------------------------------------------

def to_sparse_rows(M: Matrix) -> list[dict]:
    return [{j: x for j, x in enumerate(row) if x} for row in M]


def zeros(n: int, m: int, F: CyclotomicField) -> Matrix:
    return [[F.zero] * m for _ in range(n)]


def identity(n: int, F: CyclotomicField) -> Matrix:
    M = zeros(n, n, F)
    for i in range(n):
        M[i][i] = F.one
    return M


def diag(entries: Sequence[Cyc], F: CyclotomicField) -> Matrix:
    M = zeros(len(entries), len(entries), F)
    for i, e in enumerate(entries):
        M[i][i] = F.coerce(e)
    return M


def matrix(rows, F: CyclotomicField) -> Matrix:
    return [[F.coerce(x) for x in row] for row in rows]


def transpose(M: Matrix) -> Matrix:
    return [list(col) for col in zip(*M)]


def matmul(A: Matrix, B: Matrix, F: CyclotomicField) -> Matrix:
    m = len(B[0]) if B else 0
    Bs = to_sparse_rows(B)
    out = []
    for row in A:
        acc: dict = {}
        for k, a in enumerate(row):
            if a:
                for j, b in Bs[k].items():
                    old = acc.get(j)
                    acc[j] = a * b if old is None else old + a * b
        out.append([acc.get(j, F.zero) for j in range(m)])
    return out


def matvec(A: Matrix, v: Sequence[Cyc], F: CyclotomicField) -> list[Cyc]:
    out = []
    for row in A:
        acc = F.zero
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def matadd(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matsub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matscale(A: Matrix, s) -> Matrix:
    return [[a * s for a in row] for row in A]


def matpow(A: Matrix, e: int, F: CyclotomicField) -> Matrix:
    if e < 0:
        return matpow(inverse(A, F), -e, F)
    R = identity(len(A), F)
    B = A
    while e:
        if e & 1:
            R = matmul(R, B, F)
        e >>= 1
        if e:
            B = matmul(B, B, F)
    return R


def kron(A: Matrix, B: Matrix, F: CyclotomicField) -> Matrix:
    n, m = len(B), len(B[0])
    out = zeros(len(A) * n, len(A[0]) * m, F)
    for i, ra in enumerate(A):
        for j, a in enumerate(ra):
            if a:
                for k, rb in enumerate(B):
                    for l, b in enumerate(rb):
                        if b:
                            out[i * n + k][j * m + l] = a * b
    return out


def block_diag(blocks: Sequence[Matrix], F: CyclotomicField) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n, F)
    o = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[o + i][o + j] = x
        o += len(b)
    return out


def mat_equal(A: Matrix, B: Matrix) -> bool:
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def is_zero_matrix(A: Matrix) -> bool:
    return all(not x for row in A for x in row)


def is_diagonal(A: Matrix) -> bool:
    return all(not x for i, row in enumerate(A) for j, x in enumerate(row) if i != j)


def matrank(A: Matrix, F: CyclotomicField) -> int:
    if not A:
        return 0
    return rank(to_sparse_rows(A), len(A[0]), F)


def inverse(A: Matrix, F: CyclotomicField) -> Matrix:
    n = len(A)
    rows = [{**{j: x for j, x in enumerate(row) if x}, **{n + i: F.one}} for i, row in enumerate(A)]
    pivots, prow = rref(rows, 2 * n, F)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [[prow[i].get(n + j, F.zero) for j in range(n)] for i in range(n)]


def solve_matrix(A: Matrix, B: Matrix, F: CyclotomicField) -> Matrix | None:
    """X with A X = B (columns solved independently), or None if inconsistent."""
    n = len(A[0])
    cols = []
    for j in range(len(B[0])):
        rows = []
        for i, row in enumerate(A):
            r = {k: x for k, x in enumerate(row) if x}
            if B[i][j]:
                r[n] = B[i][j]
            rows.append(r)
        x = solve_augmented(rows, n, F)
        if x is None:
            return None
        cols.append(x)
    return transpose(cols)


def nullspace_dense(A: Matrix, F: CyclotomicField) -> list[list[Cyc]]:
    m = len(A[0])
    return [[v.get(j, F.zero) for j in range(m)] for v in nullspace(to_sparse_rows(A), m, F)]


def is_scalar_multiple(A: Matrix, B: Matrix) -> Cyc | None:
    """Return c with A = c*B if it exists (B nonzero), else None."""
    c = None
    for ra, rb in zip(A, B):
        for a, b in zip(ra, rb):
            if b:
                r = a / b
                if c is None:
                    c = r
                elif r != c:
                    return None
            elif a:
                return None
    return c
