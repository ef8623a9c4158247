# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled worklist implementations of the bitset/Cayley-table kernels.

Same contracts as ``pyk.py``: int32 tables and index arrays, boolean outputs.
"""

import numpy as np

cimport cython


def closure(table, seed):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.int32)
    cdef int n = t.shape[0]
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] member = out
    elems_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] elems = elems_arr
    cdef int m = 0, i = 0, j, a, b, c
    member[0] = 1
    elems[0] = 0
    m = 1
    seed_arr = np.asarray(seed, dtype=np.int32)
    cdef int[::1] s = seed_arr
    for j in range(s.shape[0]):
        a = s[j]
        if not member[a]:
            member[a] = 1
            elems[m] = a
            m += 1
    while i < m:
        a = elems[i]
        j = 0
        while j < m:
            b = elems[j]
            c = t[a, b]
            if not member[c]:
                member[c] = 1
                elems[m] = c
                m += 1
            c = t[b, a]
            if not member[c]:
                member[c] = 1
                elems[m] = c
                m += 1
            j += 1
        i += 1
    return out.view(np.bool_)


def product_set(table, a, b):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.int32)
    out = np.zeros(t.shape[0], dtype=np.uint8)
    cdef unsigned char[::1] member = out
    cdef int[::1] ai = np.asarray(a, dtype=np.int32)
    cdef int[::1] bi = np.asarray(b, dtype=np.int32)
    cdef Py_ssize_t i, j
    for i in range(ai.shape[0]):
        for j in range(bi.shape[0]):
            member[t[ai[i], bi[j]]] = 1
    return out.view(np.bool_)


def conjugate_expand(table, inv, seed, conjugators):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.int32)
    cdef int[::1] iv = np.asarray(inv, dtype=np.int32)
    out = np.zeros(t.shape[0], dtype=np.uint8)
    cdef unsigned char[::1] member = out
    cdef int[::1] s = np.asarray(seed, dtype=np.int32)
    cdef int[::1] ys = np.asarray(conjugators, dtype=np.int32)
    cdef Py_ssize_t i, j
    cdef int y, yi
    for j in range(ys.shape[0]):
        y = ys[j]
        yi = iv[y]
        for i in range(s.shape[0]):
            member[t[t[yi, s[i]], y]] = 1
    return out.view(np.bool_)


def core_members(table, inv, members, conjugators):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.int32)
    cdef int[::1] iv = np.asarray(inv, dtype=np.int32)
    members_u8 = np.ascontiguousarray(members, dtype=np.uint8)
    cdef unsigned char[::1] mem = members_u8
    out = np.zeros(t.shape[0], dtype=np.uint8)
    cdef unsigned char[::1] keep = out
    cdef int[::1] ys = np.asarray(conjugators, dtype=np.int32)
    cdef Py_ssize_t i, j, n = t.shape[0]
    cdef int y, ok
    for i in range(n):
        if not mem[i]:
            continue
        ok = 1
        for j in range(ys.shape[0]):
            y = ys[j]
            if not mem[t[t[iv[y], i], y]]:
                ok = 0
                break
        keep[i] = ok
    return out.view(np.bool_)
