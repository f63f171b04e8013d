# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels with a fixed-width fast path.

Inputs are converted to int64 when every value is below 2**53 in magnitude;
products then fit in __int128 with room for 2**20 accumulated terms. Any
value that would leave that range sends the call to the pure-Python kernel,
so results are always exact.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

from qrr import _kernels_py as _py

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef int64_t LIMIT = 1LL << 53
cdef Py_ssize_t MAX_TERMS = 1 << 20


class _Overflow(Exception):
    pass


cdef int64_t* _load(list xs, Py_ssize_t n) except NULL:
    cdef int64_t* buf = <int64_t*> malloc((n if n > 0 else 1) * sizeof(int64_t))
    cdef Py_ssize_t i
    cdef object x
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        x = xs[i]
        if not (-LIMIT < x < LIMIT):
            free(buf)
            raise _Overflow()
        buf[i] = x
    return buf


def conv(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), lb = len(b), k, i, lo, hi, top
    cdef int64_t* pa = NULL
    cdef int64_t* pb = NULL
    cdef i128 s
    cdef list out
    if n <= 0:
        return []
    if la == 0 or lb == 0:
        return [0] * n
    if la > MAX_TERMS or lb > MAX_TERMS:
        return _py.conv(a, b, n)
    try:
        pa = _load(a, la)
        pb = _load(b, lb)
    except _Overflow:
        if pa != NULL:
            free(pa)
        return _py.conv(a, b, n)
    out = [0] * n
    top = la + lb - 1
    if top > n:
        top = n
    try:
        for k in range(top):
            lo = k - lb + 1
            if lo < 0:
                lo = 0
            hi = k if k < la - 1 else la - 1
            s = 0
            for i in range(lo, hi + 1):
                s += <i128> pa[i] * pb[k - i]
            if s >= LIMIT or s <= -LIMIT:
                raise _Overflow()
            out[k] = <int64_t> s
    except _Overflow:
        return _py.conv(a, b, n)
    finally:
        free(pa)
        free(pb)
    return out


def inv(list a, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), k, j, hi
    cdef int64_t* pa = NULL
    cdef int64_t* pb = NULL
    cdef int64_t a0
    cdef i128 s
    cdef list out
    if la == 0 or a[0] == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    if (a[0] != 1 and a[0] != -1) or n <= 0 or n > MAX_TERMS:
        return _py.inv(a, n)
    try:
        pa = _load(a, la)
    except _Overflow:
        return _py.inv(a, n)
    pb = <int64_t*> malloc(n * sizeof(int64_t))
    if pb == NULL:
        free(pa)
        raise MemoryError()
    a0 = pa[0]
    try:
        pb[0] = a0
        for k in range(1, n):
            hi = k if k < la - 1 else la - 1
            s = 0
            for j in range(1, hi + 1):
                s += <i128> pa[j] * pb[k - j]
            s = -a0 * s
            if s >= LIMIT or s <= -LIMIT:
                raise _Overflow()
            pb[k] = <int64_t> s
        out = [pb[k] for k in range(n)]
    except _Overflow:
        return _py.inv(a, n)
    finally:
        free(pa)
        free(pb)
    return out, 1


def mul_binom(list p, object c, Py_ssize_t e):
    cdef Py_ssize_t n = len(p), i
    cdef int64_t* pp = NULL
    cdef int64_t cc
    cdef i128 s
    cdef list out
    if e <= 0 or e >= n or not (-LIMIT < c < LIMIT):
        return _py.mul_binom(p, c, e)
    try:
        pp = _load(p, n)
    except _Overflow:
        return _py.mul_binom(p, c, e)
    cc = c
    out = p[:e]
    try:
        for i in range(e, n):
            s = <i128> pp[i] - <i128> cc * pp[i - e]
            if s >= LIMIT or s <= -LIMIT:
                raise _Overflow()
            out.append(<int64_t> s)
    except _Overflow:
        return _py.mul_binom(p, c, e)
    finally:
        free(pp)
    return out


def div_binom(list p, object c, Py_ssize_t e):
    cdef Py_ssize_t n = len(p), i
    cdef int64_t* pp = NULL
    cdef int64_t cc
    cdef i128 s
    if e <= 0 or e >= n or not (-LIMIT < c < LIMIT):
        return _py.div_binom(p, c, e)
    try:
        pp = _load(p, n)
    except _Overflow:
        return _py.div_binom(p, c, e)
    cc = c
    try:
        for i in range(e, n):
            s = <i128> pp[i] + <i128> cc * pp[i - e]
            if s >= LIMIT or s <= -LIMIT:
                raise _Overflow()
            pp[i] = <int64_t> s
        return [pp[i] for i in range(n)]
    except _Overflow:
        return _py.div_binom(p, c, e)
    finally:
        free(pp)
