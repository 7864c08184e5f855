# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.

Same contracts as ``_pykernels``. Each kernel first tries 64-bit machine
arithmetic with explicit overflow checks and redoes the work on Python
integers the moment any intermediate would overflow, so results are always
exact and identical to the pure-Python path.
"""

from libc.stdlib cimport malloc, free
from math import gcd

from ordcurves import _pykernels

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_sub_overflow(long long a, long long b, long long *res) nogil

cdef long long LIM31 = 2147483647


cdef inline long long _gcd(long long a, long long b) nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


def primitive(v):
    return _pykernels.primitive(v)


def cross(u, v):
    return _pykernels.cross(u, v)


def pair_groups(triples):
    cdef Py_ssize_t m = len(triples)
    cdef Py_ssize_t i, j
    cdef long long *buf
    cdef long long u0, u1, u2, v0, v1, v2, c0, c1, c2, g
    cdef bint small = True
    for t in triples:
        for a in t:
            if a > LIM31 or a < -LIM31:
                small = False
                break
        if not small:
            break
    if not small or m < 2:
        return _pykernels.pair_groups(triples)

    buf = <long long *> malloc(3 * m * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    groups = {}
    try:
        for i in range(m):
            t = triples[i]
            buf[3 * i] = t[0]
            buf[3 * i + 1] = t[1]
            buf[3 * i + 2] = t[2]
        for i in range(m):
            u0 = buf[3 * i]
            u1 = buf[3 * i + 1]
            u2 = buf[3 * i + 2]
            for j in range(i + 1, m):
                v0 = buf[3 * j]
                v1 = buf[3 * j + 1]
                v2 = buf[3 * j + 2]
                c0 = u1 * v2 - u2 * v1
                c1 = u2 * v0 - u0 * v2
                c2 = u0 * v1 - u1 * v0
                g = _gcd(_gcd(c0, c1), c2)
                if g == 0:
                    continue
                if c0 < 0 or (c0 == 0 and (c1 < 0 or (c1 == 0 and c2 < 0))):
                    g = -g
                key = (c0 // g, c1 // g, c2 // g)
                s = groups.get(key)
                if s is None:
                    groups[key] = {i, j}
                else:
                    s.add(i)
                    s.add(j)
    finally:
        free(buf)
    return {k: sorted(s) for k, s in groups.items()}


cdef int _echelon_small(long long *mat, Py_ssize_t nrows, Py_ssize_t ncols,
                        long long *piv, Py_ssize_t *pcol, Py_ssize_t *rank) nogil:
    """Gauss-Jordan in int64. Returns 0 on success, 1 on overflow."""
    cdef Py_ssize_t r, k, c, q, nk
    cdef long long a, p, g, t1, t2
    cdef long long *v
    cdef long long *w
    nk = 0
    for r in range(nrows):
        if nk == ncols:
            break
        v = mat + r * ncols
        for k in range(nk):
            c = pcol[k]
            a = v[c]
            if a == 0:
                continue
            w = piv + k * ncols
            p = w[c]
            g = 0
            for q in range(ncols):
                if __builtin_mul_overflow(p, v[q], &t1):
                    return 1
                if __builtin_mul_overflow(a, w[q], &t2):
                    return 1
                if __builtin_sub_overflow(t1, t2, &v[q]):
                    return 1
                g = _gcd(g, v[q])
            if g > 1:
                for q in range(ncols):
                    v[q] = v[q] // g
        c = 0
        while c < ncols and v[c] == 0:
            c += 1
        if c == ncols:
            continue
        g = 0
        for q in range(ncols):
            g = _gcd(g, v[q])
        if v[c] < 0:
            g = -g
        for q in range(ncols):
            v[q] = v[q] // g
        for k in range(nk):
            w = piv + k * ncols
            a = w[c]
            if a == 0:
                continue
            p = v[c]
            g = 0
            for q in range(ncols):
                if __builtin_mul_overflow(p, w[q], &t1):
                    return 1
                if __builtin_mul_overflow(a, v[q], &t2):
                    return 1
                if __builtin_sub_overflow(t1, t2, &w[q]):
                    return 1
                g = _gcd(g, w[q])
            if g > 1:
                for q in range(ncols):
                    w[q] = w[q] // g
        w = piv + nk * ncols
        for q in range(ncols):
            w[q] = v[q]
        pcol[nk] = c
        nk += 1
    rank[0] = nk
    return 0


def echelon(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, q, rank = 0
    cdef long long *mat
    cdef long long *piv
    cdef Py_ssize_t *pcol
    cdef int status
    if nrows == 0 or ncols == 0:
        return []
    for row in rows:
        for a in row:
            if a > LIM31 or a < -LIM31:
                return _pykernels.echelon(rows, ncols)
    mat = <long long *> malloc(nrows * ncols * sizeof(long long))
    piv = <long long *> malloc(ncols * ncols * sizeof(long long))
    pcol = <Py_ssize_t *> malloc(ncols * sizeof(Py_ssize_t))
    if mat == NULL or piv == NULL or pcol == NULL:
        free(mat)
        free(piv)
        free(pcol)
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for q in range(ncols):
                mat[i * ncols + q] = row[q]
        with nogil:
            status = _echelon_small(mat, nrows, ncols, piv, pcol, &rank)
        if status:
            return _pykernels.echelon(rows, ncols)
        out = []
        for i in range(rank):
            out.append((pcol[i], tuple([piv[i * ncols + q] for q in range(ncols)])))
    finally:
        free(mat)
        free(piv)
        free(pcol)
    out.sort()
    return [r for _, r in out]


def nullspace(rows, Py_ssize_t ncols):
    red = echelon(rows, ncols)
    pcols = []
    for r in red:
        c = 0
        while r[c] == 0:
            c += 1
        pcols.append(c)
    pset = set(pcols)
    raw = []
    for j in range(ncols):
        if j in pset:
            continue
        scale = 1
        for r, c in zip(red, pcols):
            if r[j]:
                p = r[c]
                scale = scale * p // gcd(scale, p)
        v = [0] * ncols
        v[j] = scale
        for r, c in zip(red, pcols):
            if r[j]:
                v[c] = -r[j] * (scale // r[c])
        raw.append(v)
    return echelon(raw, ncols)


def monomial_rows(exponents, points):
    return _pykernels.monomial_rows(exponents, points)


def dot_rows(vectors, rows):
    return _pykernels.dot_rows(vectors, rows)
