# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops for truncated integer series.

Same contract as ``invmod._kernels_py``; entries are Python ints of
arbitrary size, so the gain comes from typed loop indices and skipping
the interpreter dispatch per term.
"""


def convolve(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, top
    cdef list out = [0] * (n + 1)
    cdef object ai, bj
    if la > n + 1:
        la = n + 1
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        top = n + 1 - i
        if top > lb:
            top = lb
        for j in range(top):
            bj = b[j]
            if bj == 0:
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def axpby(object x, list a, object y, list b):
    cdef Py_ssize_t n = len(a), i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = x * a[i] + y * b[i]
    return out


def scale_by_index(list a, int power):
    cdef Py_ssize_t n = len(a), i
    cdef list out = [0] * n
    cdef object idx
    for i in range(n):
        idx = i  # Python int, so the power is exact
        out[i] = a[i] * idx ** power
    return out
