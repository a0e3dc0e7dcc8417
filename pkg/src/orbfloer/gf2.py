"""Sparse GF(2) matrices and rank computation.

The elimination kernel exists twice: a compiled bit-packed version built
from ``_gf2core.pyx`` at install time, and a pure-Python bitset version
in ``_gf2_fallback``.  Import picks whichever is available; ``BACKEND``
records the choice.  ``benchmarks/bench_gf2.py`` compares the two.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable

from . import _gf2_fallback

try:
    from . import _gf2core
except ImportError:  # extension not built on this install
    _gf2core = None

BACKEND = "compiled" if _gf2core is not None else "pure"


@dataclass(frozen=True)
class Gf2Matrix:
    """A rows x cols matrix over GF(2) stored as a set of nonzero positions."""

    rows: int
    cols: int
    entries: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry {(r, c)} outside {self.rows}x{self.cols}")

    @classmethod
    def from_entries(cls, rows: int, cols: int,
                     entries: Iterable[tuple[int, int]]) -> Gf2Matrix:
        """Build from an entry iterable; positions listed twice cancel."""
        acc: set[tuple[int, int]] = set()
        for pos in entries:
            acc ^= {pos}
        return cls(rows, cols, frozenset(acc))

    def row_bitsets(self) -> list[int]:
        out = [0] * self.rows
        for r, c in self.entries:
            out[r] |= 1 << c
        return out

    def column_sets(self) -> list[frozenset[int]]:
        """For each column, the set of rows with a nonzero entry."""
        acc: list[set[int]] = [set() for _ in range(self.cols)]
        for r, c in self.entries:
            acc[c].add(r)
        return [frozenset(s) for s in acc]


def _rank_pure(m: Gf2Matrix) -> int:
    return _gf2_fallback.rank_rows(m.row_bitsets(), m.cols)


def _rank_compiled(m: Gf2Matrix) -> int:
    if _gf2core is None:
        raise RuntimeError("compiled kernel not available")
    if not m.entries:
        return 0
    n_words = (m.cols + 63) >> 6
    words = [0] * (m.rows * n_words)
    for r, c in m.entries:
        words[r * n_words + (c >> 6)] |= 1 << (c & 63)
    buf = bytearray(m.rows * n_words * 8)
    for i, w in enumerate(words):
        buf[i * 8:(i + 1) * 8] = w.to_bytes(8, sys.byteorder)
    view = memoryview(buf).cast("Q", (m.rows, n_words))
    return _gf2core.rank_packed(view, m.cols)


def rank_gf2(m: Gf2Matrix) -> int:
    """Rank of ``m`` over GF(2), via whichever kernel is active."""
    if not m.entries:
        return 0
    if _gf2core is not None:
        return _rank_compiled(m)
    return _rank_pure(m)


__all__ = ["BACKEND", "Gf2Matrix", "rank_gf2"]
