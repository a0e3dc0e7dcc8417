"""Pure-Python GF(2) elimination kernel.

Rows are arbitrary-precision Python ints used as bitsets; column ``c`` is
bit ``c``.  This is the import-time fallback when the compiled kernel
(``orbfloer._gf2core``) is unavailable.
"""

from __future__ import annotations


def rank_rows(rows: list[int], n_cols: int) -> int:
    """Rank over GF(2) of the matrix whose rows are the given bitsets."""
    work = [r for r in rows if r]
    rank = 0
    for col in range(n_cols):
        mask = 1 << col
        pivot = -1
        for idx in range(rank, len(work)):
            if work[idx] & mask:
                pivot = idx
                break
        if pivot < 0:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pivot_row = work[rank]
        for idx in range(rank + 1, len(work)):
            if work[idx] & mask:
                work[idx] ^= pivot_row
        rank += 1
        if rank == len(work):
            break
    return rank


__all__ = ["rank_rows"]
