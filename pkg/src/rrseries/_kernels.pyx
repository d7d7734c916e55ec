# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the pure-Python kernels in ``_kernels_py``.

Same schoolbook algorithms on the same Python-int coefficients; the win
is loop and indexing overhead, not arithmetic (which stays exact and
arbitrary precision).  Signatures must match ``_kernels_py`` exactly.
"""

BACKEND_NAME = "cython"


def mul_trunc(list a, list b, Py_ssize_t n):
    """First ``n`` coefficients of the Cauchy product of lists ``a`` and ``b``."""
    cdef list out = [0] * n
    cdef Py_ssize_t i, j, imax, jmax
    cdef object ai, bj
    imax = len(a)
    if imax > n:
        imax = n
    for i in range(imax):
        ai = a[i]
        if not ai:
            continue
        jmax = len(b)
        if jmax > n - i:
            jmax = n - i
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def invert_trunc(list a, Py_ssize_t n):
    """First ``n`` coefficients of 1/a; requires a[0] in {+1, -1}."""
    cdef object a0 = a[0]
    cdef list out = [0] * n
    cdef Py_ssize_t k, i, imax, alen
    cdef object acc, ai
    out[0] = a0
    alen = len(a)
    for k in range(1, n):
        acc = 0
        imax = k + 1
        if imax > alen:
            imax = alen
        for i in range(1, imax):
            ai = a[i]
            if ai:
                acc = acc + ai * out[k - i]
        out[k] = -a0 * acc
    return out


def binomial_update(list c, Py_ssize_t e, object coef, Py_ssize_t n):
    """In place: multiply list ``c`` by (1 + coef*q^e), truncated to ``n``."""
    cdef Py_ssize_t i
    cdef object lo, s
    if e == 0:
        s = 1 + coef
        for i in range(n):
            c[i] = c[i] * s
        return
    for i in range(n - 1, e - 1, -1):
        lo = c[i - e]
        if lo:
            c[i] = c[i] + coef * lo
