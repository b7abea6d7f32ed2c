# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled Z/2 column reduction kernel.

Columns are bitsets packed into 64-bit words, XORed in place.  Each column
tracks its highest nonzero word, so the work per addition is proportional to
the actual bit support (the boundary matrix is strictly upper triangular and
its columns stay short).  Same contract as the pure-Python kernel in
_reduce_py.
"""

import numpy as np


cdef inline int _top_bit(unsigned long long word):
    cdef int b = 0
    if word >> 32:
        b += 32
        word >>= 32
    if word >> 16:
        b += 16
        word >>= 16
    if word >> 8:
        b += 8
        word >>= 8
    if word >> 4:
        b += 4
        word >>= 4
    if word >> 2:
        b += 2
        word >>= 2
    if word >> 1:
        b += 1
    return b


def reduce_columns(columns):
    """Standard persistence reduction over Z/2.

    `columns[j]` lists the row indices of the nonzero entries of boundary
    column j; rows and columns share the filtration order.  Returns, per
    column, the row index of its lowest one after reduction, or -1 if the
    column was cleared.
    """
    cdef Py_ssize_t n = len(columns)
    if n == 0:
        return []
    cdef Py_ssize_t words = (n + 63) >> 6
    mat_arr = np.zeros((n, words), dtype=np.uint64)
    lows_arr = np.full(n, -1, dtype=np.int64)
    owner_arr = np.full(n, -1, dtype=np.int64)
    top_arr = np.full(n, -1, dtype=np.int64)
    cdef unsigned long long[:, ::1] mat = mat_arr
    cdef long long[::1] lows = lows_arr
    cdef long long[::1] owner = owner_arr
    cdef long long[::1] top = top_arr  # highest nonzero word per column

    cdef Py_ssize_t j, w, r, low, hi
    cdef long long other
    for j in range(n):
        for r in columns[j]:
            w = (<Py_ssize_t> r) >> 6
            mat[j, w] |= (<unsigned long long> 1) << ((<Py_ssize_t> r) & 63)
            if w > top[j]:
                top[j] = w
        while True:
            low = -1
            w = top[j]
            while w >= 0:
                if mat[j, w] != 0:
                    low = (w << 6) + _top_bit(mat[j, w])
                    break
                w -= 1
            top[j] = w
            if low < 0:
                break
            other = owner[low]
            if other < 0:
                break
            # the owner's support also ends at `low`, so XOR within it
            hi = low >> 6
            for w in range(hi + 1):
                mat[j, w] ^= mat[other, w]
            top[j] = hi
        if low >= 0:
            lows[j] = low
            owner[low] = j
    return lows_arr.tolist()
