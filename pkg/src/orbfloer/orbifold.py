"""Cyclic orbifold constructions: the singular-fiber structure, the
copy-and-shift extension, and the iterated homology invariant.

The type D structure ``d_n(n)`` is an ``n``-cycle of ``i2``-generators
with ``r23``-labeled edges; its labeled paths out of any generator are
the powers of ``r23``.  The copy-and-shift extension replaces each
generator ``y`` of a type A structure by ``n`` copies ``y:1 .. y:n`` and
routes the output of an operation to the copy advanced by the number of
``r3``/``r23``/``r123`` arguments consumed; pairing the extension of
``a`` with ``d_n(1)`` reproduces the pairing of ``a`` with ``d_n(n)``,
which is what ``lemma42_witness`` certifies.

``hfo`` iterates the extension over all but the last orbifold order and
takes the homology rank of the pairing with the last one.  Orders equal
to 1 still contribute a (trivial) extension step; they are not skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import BasisElement, shift_weight
from .errors import InvalidOrder, InvalidStructure
from .homology import homology_rank
from .structures import (
    Generator,
    MorphismA,
    TypeAStructure,
    TypeDAStructure,
    TypeDStructure,
    Word,
    check_type_a,
)
from .tensor import ChainComplex, box_a_d, box_a_da, pair_name


@dataclass(frozen=True)
class OrbifoldOrders:
    """A nonempty sequence of positive singular-fiber multiplicities."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders:
            raise InvalidOrder("at least one orbifold order is required")
        for n in self.orders:
            if not isinstance(n, int) or n < 1:
                raise InvalidOrder(f"orbifold order must be a positive integer, got {n!r}")

    def __iter__(self):
        return iter(self.orders)

    def __len__(self) -> int:
        return len(self.orders)


@dataclass(frozen=True)
class IndexedGenerator:
    """A generator copy ``base:copy`` produced by the extension."""

    base: Generator
    copy: int

    @property
    def name(self) -> str:
        return f"{self.base.name}:{self.copy}"

    def as_generator(self) -> Generator:
        return Generator(self.name, self.base.idem)


def d_n(n: int) -> TypeDStructure:
    """The ``r23``-labeled ``n``-cycle on ``i2`` generators ``x1 .. xn``."""
    if not isinstance(n, int) or n < 1:
        raise InvalidOrder(f"cycle length must be a positive integer, got {n!r}")
    gens = [Generator(f"x{j}", BasisElement.I2) for j in range(1, n + 1)]
    edges = [(gens[j], gens[(j + 1) % n], BasisElement.R23) for j in range(n)]
    return TypeDStructure(gens, edges)


def bracket(j: int, n: int) -> int:
    """Reduce ``j`` into the window ``1 .. n``: ``n`` when ``n`` divides ``j``,
    otherwise ``j mod n``."""
    if not isinstance(n, int) or n < 1:
        raise InvalidOrder(f"modulus must be a positive integer, got {n!r}")
    if j < 1:
        raise ValueError(f"index must be at least 1, got {j!r}")
    return n if j % n == 0 else j % n


def shift_count(word: Word) -> int:
    """Total shift weight of a word (one per ``r3``, ``r23``, ``r123``)."""
    return sum(shift_weight(b) for b in word)


def _indexed(y: Generator, j: int) -> Generator:
    return IndexedGenerator(y, j).as_generator()


def orb_extend(a: TypeAStructure, n: int) -> TypeAStructure:
    """Copy-and-shift extension of ``a`` by a cyclic order ``n``.

    Copy ``j`` of an operation sends its output to copy
    ``bracket(j + shift_count(word), n)``.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidOrder(f"extension order must be a positive integer, got {n!r}")
    if not check_type_a(a):
        raise InvalidStructure("extension requires a valid type A structure")
    gens = [_indexed(y, j) for j in range(1, n + 1) for y in a.generators]
    ops: dict[tuple[Generator, Word], set[Generator]] = {}
    for (y, word), outs in a.ops.items():
        shift = shift_count(word)
        for j in range(1, n + 1):
            target_copy = bracket(j + shift, n)
            ops[(_indexed(y, j), word)] = {_indexed(z, target_copy) for z in outs}
    return TypeAStructure(gens, ops)


def lemma42_witness(a: TypeAStructure, n: int) -> tuple[dict[str, str], bool]:
    """Certify that extension-then-pairing equals pairing with the cycle.

    Builds the complexes ``box_a_d(orb_extend(a, n), d_n(1))`` and
    ``box_a_d(a, d_n(n))``, and the bijection sending ``(y:j) ⊗ x1``
    to ``y ⊗ xj``.  Returns the bijection (by generator name) and
    whether it intertwines the two boundary matrices entrywise.
    """
    left = box_a_d(orb_extend(a, n), d_n(1))
    right = box_a_d(a, d_n(n))
    mapping: dict[str, str] = {}
    for y in a.generators:
        if y.idem is not BasisElement.I2:
            continue
        for j in range(1, n + 1):
            mapping[pair_name(f"{y.name}:{j}", "x1")] = pair_name(y.name, f"x{j}")
    ok = set(mapping) == set(left.generators) and set(mapping.values()) == set(right.generators)
    if ok:
        left_index = {name: i for i, name in enumerate(left.generators)}
        right_index = {name: i for i, name in enumerate(right.generators)}
        translate = {left_index[src]: right_index[dst] for src, dst in mapping.items()}
        mapped = {(translate[r], translate[c]) for (r, c) in left.boundary.entries}
        ok = mapped == set(right.boundary.entries)
    return mapping, ok


def orb_extend_box_da(a: TypeAStructure, da: TypeDAStructure, n: int) -> TypeAStructure:
    """Copy-and-shift extension of the pairing ``a`` box ``da``.

    The copy index of the output is advanced by the shift count of the
    outer argument word, so this is the extension of the box product.
    """
    return orb_extend(box_a_da(a, da), n)


def shift_morphism(t: MorphismA, n: int) -> MorphismA:
    """Extend a morphism copywise with the same index shift as the structures."""
    if not isinstance(n, int) or n < 1:
        raise InvalidOrder(f"extension order must be a positive integer, got {n!r}")
    components: dict[tuple[Generator, Word], set[Generator]] = {}
    for (x, word), outs in t.components.items():
        shift = shift_count(word)
        for j in range(1, n + 1):
            target_copy = bracket(j + shift, n)
            components[(_indexed(x, j), word)] = {_indexed(z, target_copy) for z in outs}
    return MorphismA(components)


def hfo(a: TypeAStructure, orders: OrbifoldOrders | Sequence[int]) -> int:
    """Homology rank of the iterated orbifold pairing.

    Applies the copy-and-shift extension for every order but the last,
    then pairs with the cycle of the last order and takes homology.
    """
    if not isinstance(orders, OrbifoldOrders):
        orders = OrbifoldOrders(tuple(orders))
    current = a
    for n in orders.orders[:-1]:
        current = orb_extend(current, n)
    return homology_rank(box_a_d(current, d_n(orders.orders[-1])))


def hfo_complex(a: TypeAStructure, orders: OrbifoldOrders | Sequence[int]) -> ChainComplex:
    """The chain complex whose homology rank :func:`hfo` reports."""
    if not isinstance(orders, OrbifoldOrders):
        orders = OrbifoldOrders(tuple(orders))
    current = a
    for n in orders.orders[:-1]:
        current = orb_extend(current, n)
    return box_a_d(current, d_n(orders.orders[-1]))


__all__ = [
    "IndexedGenerator",
    "OrbifoldOrders",
    "bracket",
    "d_n",
    "hfo",
    "hfo_complex",
    "lemma42_witness",
    "orb_extend",
    "orb_extend_box_da",
    "shift_count",
    "shift_morphism",
]
