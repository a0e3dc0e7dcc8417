# cython: language_level=3, boundscheck=False, wraparound=False
"""Bit-packed GF(2) Gaussian elimination (compiled kernel).

Rows are packed into native-endian 64-bit words: column ``c`` lives in
word ``c >> 6`` at bit ``c & 63``.  The memoryview is modified in place.
"""


def rank_packed(unsigned long long[:, ::1] rows, Py_ssize_t n_cols):
    """Rank over GF(2) of the packed row matrix."""
    cdef Py_ssize_t n_rows = rows.shape[0]
    cdef Py_ssize_t n_words = rows.shape[1]
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t col, r, w, pivot, word_idx
    cdef unsigned long long mask, tmp
    if n_rows == 0 or n_words == 0:
        return 0
    with nogil:
        for col in range(n_cols):
            word_idx = col >> 6
            mask = (<unsigned long long>1) << (col & 63)
            pivot = -1
            for r in range(rank, n_rows):
                if rows[r, word_idx] & mask:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rank:
                for w in range(n_words):
                    tmp = rows[rank, w]
                    rows[rank, w] = rows[pivot, w]
                    rows[pivot, w] = tmp
            for r in range(rank + 1, n_rows):
                if rows[r, word_idx] & mask:
                    for w in range(n_words):
                        rows[r, w] ^= rows[rank, w]
            rank += 1
            if rank == n_rows:
                break
    return rank
