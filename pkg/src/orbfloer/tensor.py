"""Box tensor products pairing the three structure flavors.

``box_a_d`` pairs a type A structure with a type D structure into a chain
complex, ``box_a_da`` pairs a type A structure with a type DA structure
into a new type A structure, and ``box_da_d`` pairs a type DA structure
with a type D structure into a new type D structure.

Pair generators are named ``"y⊗x"`` (left factor first) and ordered with
the left factor outermost, so outputs are deterministic.

Idempotent-labeled edges in the type D factor meet the strictly unital
convention: a single idempotent behaves as ``m_2(y, i) = y``, and any
longer word containing an idempotent contributes nothing.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .algebra import BasisElement
from .gf2 import Gf2Matrix
from .structures import (
    DAGenerator,
    Generator,
    TypeAStructure,
    TypeDAStructure,
    TypeDStructure,
    Word,
)

PAIR_SEP = "⊗"


@dataclass(frozen=True)
class ChainComplex:
    """Finitely generated chain complex over GF(2).

    ``boundary`` is square; entry ``(i, j)`` means the boundary of
    generator ``j`` contains generator ``i``.
    """

    generators: tuple[str, ...]
    boundary: Gf2Matrix

    def __post_init__(self):
        n = len(self.generators)
        if self.boundary.rows != n or self.boundary.cols != n:
            raise ValueError("boundary matrix must be square of generator size")


def pair_name(left: str, right: str) -> str:
    return f"{left}{PAIR_SEP}{right}"


def _paths_up_to(d: TypeDStructure, start: Generator,
                 max_len: int) -> Iterator[tuple[Word, Generator]]:
    """Yield every labeled path of length 1..max_len out of ``start``.

    Paths are yielded once each; parity bookkeeping is the caller's job.
    """
    stack: list[tuple[Word, Generator]] = [((), start)]
    while stack:
        word, g = stack.pop()
        if len(word) >= max_len:
            continue
        for e in d.out_edges(g):
            ext = (word + (e.label,), e.to)
            yield ext
            stack.append(ext)


def _apply_m(a: TypeAStructure, y: Generator, word: Word) -> frozenset[Generator]:
    """Evaluate ``m_{k+1}(y, word)`` including implicit idempotent actions."""
    if all(b.is_reeb for b in word):
        return a.lookup(y, word)
    if len(word) == 1 and word[0] is y.idem:
        return frozenset({y})
    return frozenset()


def box_a_d(a: TypeAStructure, d: TypeDStructure) -> ChainComplex:
    """Chain complex of the pairing ``a`` box ``d``.

    Generators are the idempotent-matched pairs; the boundary of
    ``y ⊗ x`` collects ``m_{k+1}(y, word) ⊗ endpoint`` over all
    labeled paths of length ``k >= 0`` out of ``x``.
    """
    pairs = [(y, x) for y in a.generators for x in d.generators if y.idem is x.idem]
    index = {pair: i for i, pair in enumerate(pairs)}
    max_len = max(a.max_arity, 2) - 1
    entries: set[tuple[int, int]] = set()
    for (y, x) in pairs:
        col = index[(y, x)]
        acc: set[tuple[Generator, Generator]] = set()
        for z in a.lookup(y, ()):
            acc ^= {(z, x)}
        for word, end in _paths_up_to(d, x, max_len):
            for z in _apply_m(a, y, word):
                acc ^= {(z, end)}
        for pair in acc:
            entries.add((index[pair], col))
    names = tuple(pair_name(y.name, x.name) for (y, x) in pairs)
    n = len(pairs)
    return ChainComplex(names, Gf2Matrix(n, n, frozenset(entries)))


def _da_chains(da: TypeDAStructure, start: DAGenerator, max_links: int
               ) -> Iterator[tuple[Word, Word, DAGenerator]]:
    """Yield chains of up to ``max_links`` table entries out of ``start``.

    Each chain is ``(consumed, emitted, end)``: the concatenation of the
    argument words consumed link by link, the tuple of emitted labels,
    and the final generator.
    """
    by_gen: dict[DAGenerator, list[tuple[Word, BasisElement, DAGenerator]]] = defaultdict(list)
    for (x, word), outs in da.deltas.items():
        for label, z in outs:
            by_gen[x].append((word, label, z))
    stack: list[tuple[Word, Word, DAGenerator, int]] = [((), (), start, 0)]
    while stack:
        consumed, emitted, g, links = stack.pop()
        if links >= max_links:
            continue
        for word, label, z in by_gen.get(g, []):
            ext = (consumed + word, emitted + (label,), z)
            yield ext
            stack.append((*ext, links + 1))


def box_a_da(a: TypeAStructure, da: TypeDAStructure) -> TypeAStructure:
    """Type A structure of the pairing ``a`` box ``da``.

    An operation on ``x ⊗ y`` with argument word ``w`` sums
    ``m_{j+1}(x, emitted) ⊗ end`` over every chain of ``j`` table
    entries out of ``y`` that consumes exactly ``w``; the chain-free term
    contributes the inherited differential ``m_1(x) ⊗ y``.
    """
    pairs = [(x, y) for x in a.generators for y in da.generators
             if x.idem is y.left_idem]
    out_gen = {pair: Generator(pair_name(pair[0].name, pair[1].name),
                               pair[1].right_idem)
               for pair in pairs}
    max_links = max(a.max_arity, 2) - 1
    ops: dict[tuple[Generator, Word], set[Generator]] = defaultdict(set)

    def toggle(key: tuple[Generator, Word], z: Generator) -> None:
        ops[key] ^= {z}

    for (x, y) in pairs:
        for z in a.lookup(x, ()):
            toggle((out_gen[(x, y)], ()), out_gen[(z, y)])
        for consumed, emitted, end in _da_chains(da, y, max_links):
            for z in _apply_m(a, x, emitted):
                toggle((out_gen[(x, y)], consumed), out_gen[(z, end)])
    gens = tuple(out_gen[pair] for pair in pairs)
    return TypeAStructure(gens, {k: v for k, v in ops.items() if v})


def box_da_d(da: TypeDAStructure, d: TypeDStructure) -> TypeDStructure:
    """Type D structure of the pairing ``da`` box ``d``.

    A table entry ``(x, w) -> (b, z)`` pairs with every labeled path in
    ``d`` whose word is exactly ``w``, producing an edge labeled ``b``;
    the empty word pairs with the zero-length path.  Idempotent-labeled
    edges of ``d`` act through the implicit right idempotent action,
    emitting the left idempotent of ``x``.
    """
    pairs = [(x, u) for x in da.generators for u in d.generators
             if x.right_idem is u.idem]
    out_gen = {pair: Generator(pair_name(pair[0].name, pair[1].name),
                               pair[0].left_idem)
               for pair in pairs}
    max_len = max((len(w) for (_, w) in da.deltas), default=0)
    edge_parity: dict[tuple[Generator, Generator, BasisElement], int] = defaultdict(int)
    for (x, u) in pairs:
        src = out_gen[(x, u)]
        for label, z in da.lookup(x, ()):
            edge_parity[(src, out_gen[(z, u)], label)] += 1
        for word, end in _paths_up_to(d, u, max(max_len, 1)):
            if all(b.is_reeb for b in word):
                for label, z in da.lookup(x, word):
                    edge_parity[(src, out_gen[(z, end)], label)] += 1
            elif len(word) == 1 and word[0] is x.right_idem:
                edge_parity[(src, out_gen[(x, end)], x.left_idem)] += 1
    gens = tuple(out_gen[pair] for pair in pairs)
    edges = [e for e, count in edge_parity.items() if count % 2 == 1]
    return TypeDStructure(gens, edges)


__all__ = [
    "ChainComplex",
    "PAIR_SEP",
    "box_a_d",
    "box_a_da",
    "box_da_d",
    "pair_name",
]
