"""Type D, type A, and type DA structures over the torus path algebra.

A type D structure is a finite decorated graph: generators carry an
idempotent, edges carry a basis element whose source/target idempotents
match the endpoint decorations.  A type A structure is a sparse table of
multiplications ``m_k(x, a_1, ..., a_{k-1}) -> sum of generators``.  A
type DA structure consumes algebra arguments on the right and emits a
single algebra factor on the left.

All tables follow the strictly unital convention: idempotent arguments
are never stored.  ``m_2(x, i)`` is the implicit idempotent action and
every higher operation with an idempotent argument vanishes.

Construction validates idempotent bookkeeping (raising
:class:`~orbfloer.errors.IncompatibleIdempotents` or
:class:`~orbfloer.errors.UnknownGenerator`), while ``check_type_d`` and
``check_type_a`` decide the defining structure equations.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

from .algebra import (
    BasisElement,
    basis_mul,
    source_idem,
    target_idem,
)
from .errors import IncompatibleIdempotents, UnknownGenerator

Word = tuple[BasisElement, ...]


@dataclass(frozen=True)
class Generator:
    """A named generator decorated with one of the two idempotents."""

    name: str
    idem: BasisElement

    def __post_init__(self):
        if not isinstance(self.idem, BasisElement) or not self.idem.is_idempotent:
            raise ValueError(f"generator {self.name!r} needs idempotent decoration")

    def __repr__(self) -> str:
        return f"{self.name}[{self.idem.value}]"


@dataclass(frozen=True)
class Edge:
    """A labeled edge of a type D structure."""

    frm: Generator
    to: Generator
    label: BasisElement


def _unique_generators(generators: Iterable[Generator]) -> tuple[Generator, ...]:
    gens = tuple(generators)
    seen: set[str] = set()
    for g in gens:
        if g.name in seen:
            raise ValueError(f"duplicate generator name {g.name!r}")
        seen.add(g.name)
    return gens


def _check_word(owner_idem: BasisElement, word: Word, context: str) -> BasisElement:
    """Validate a stored Reeb word against the chain condition.

    Returns the idempotent reached after consuming the word.
    """
    cur = owner_idem
    for b in word:
        if not isinstance(b, BasisElement) or not b.is_reeb:
            raise ValueError(f"{context}: stored words must be Reeb elements, got {b!r}")
        if source_idem(b) is not cur:
            raise IncompatibleIdempotents(f"{context}: word breaks at {b.value}")
        cur = target_idem(b)
    return cur


class TypeDStructure:
    """Decorated graph with edges labeled by basis elements.

    Edges are reduced modulo 2 on construction: a parallel edge listed an
    even number of times cancels.
    """

    def __init__(self, generators: Iterable[Generator],
                 edges: Iterable[tuple[Generator, Generator, BasisElement]]):
        self.generators = _unique_generators(generators)
        gen_set = set(self.generators)
        acc: set[Edge] = set()
        for frm, to, label in edges:
            if frm not in gen_set or to not in gen_set:
                raise UnknownGenerator(f"edge endpoint not in structure: {frm!r} -> {to!r}")
            if source_idem(label) is not frm.idem or target_idem(label) is not to.idem:
                raise IncompatibleIdempotents(
                    f"edge {frm.name} -> {to.name} label {label.value} "
                    f"does not match endpoint idempotents")
            acc ^= {Edge(frm, to, label)}
        self.edges: frozenset[Edge] = frozenset(acc)
        out: dict[Generator, list[Edge]] = defaultdict(list)
        for e in self.edges:
            out[e.frm].append(e)
        self._out = dict(out)

    def out_edges(self, g: Generator) -> list[Edge]:
        return self._out.get(g, [])

    def __eq__(self, other) -> bool:
        return (isinstance(other, TypeDStructure)
                and self.generators == other.generators
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.generators, self.edges))

    def __repr__(self) -> str:
        return f"TypeDStructure({len(self.generators)} generators, {len(self.edges)} edges)"


def check_type_d(d: TypeDStructure) -> bool:
    """Decide the type D structure equation.

    For every generator pair ``(x, z)`` and basis element ``c``, the number
    of two-edge paths ``x -> y -> z`` whose labels multiply to ``c`` must
    be even.
    """
    odd: set[tuple[Generator, BasisElement, Generator]] = set()
    for e1 in d.edges:
        for e2 in d.out_edges(e1.to):
            c = basis_mul(e1.label, e2.label)
            if c is not None:
                odd ^= {(e1.frm, c, e2.to)}
    return not odd


def delta_k(d: TypeDStructure, x: Generator, k: int) -> set[tuple[Word, Generator]]:
    """GF(2) sum of labeled length-``k`` paths out of ``x``.

    Each element is ``(word, endpoint)``; identical contributions cancel
    in pairs.
    """
    if x not in set(d.generators):
        raise UnknownGenerator(f"{x!r} not in structure")
    if k < 1:
        raise ValueError("path length must be at least 1")
    frontier: dict[tuple[Word, Generator], int] = {((), x): 1}
    for _ in range(k):
        nxt: dict[tuple[Word, Generator], int] = defaultdict(int)
        for (word, g), count in frontier.items():
            for e in d.out_edges(g):
                nxt[(word + (e.label,), e.to)] += count
        frontier = dict(nxt)
    return {key for key, count in frontier.items() if count % 2 == 1}


def is_bounded_d(d: TypeDStructure) -> bool:
    """True when the edge graph is acyclic (so long differentials die out)."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {g: WHITE for g in d.generators}
    for root in d.generators:
        if color[root] != WHITE:
            continue
        stack: list[tuple[Generator, int]] = [(root, 0)]
        color[root] = GRAY
        while stack:
            node, i = stack.pop()
            succs = [e.to for e in d.out_edges(node)]
            if i < len(succs):
                stack.append((node, i + 1))
                child = succs[i]
                if color[child] == GRAY:
                    return False
                if color[child] == WHITE:
                    color[child] = GRAY
                    stack.append((child, 0))
            else:
                color[node] = BLACK
    return True


class TypeAStructure:
    """Sparse multiplication table ``(x, word) -> GF(2) set of generators``.

    The word holds the ``k - 1`` Reeb arguments of ``m_k``; the empty word
    keys the differential ``m_1``.  Stored outputs must sit in the
    idempotent reached by the word.
    """

    def __init__(self, generators: Iterable[Generator],
                 ops: Mapping[tuple[Generator, Word], Iterable[Generator]]):
        self.generators = _unique_generators(generators)
        gen_set = set(self.generators)
        table: dict[tuple[Generator, Word], frozenset[Generator]] = {}
        for (x, word), outs in ops.items():
            if x not in gen_set:
                raise UnknownGenerator(f"operation on unknown generator {x!r}")
            word = tuple(word)
            end = _check_word(x.idem, word, f"m_{len(word) + 1}({x.name}, ...)")
            outset = frozenset(outs)
            for z in outset:
                if z not in gen_set:
                    raise UnknownGenerator(f"operation output {z!r} not in structure")
                if z.idem is not end:
                    raise IncompatibleIdempotents(
                        f"m_{len(word) + 1}({x.name}, ...) output {z.name} "
                        f"has wrong idempotent")
            if outset:
                table[(x, word)] = outset
        self.ops = table

    @property
    def max_arity(self) -> int:
        return max((len(w) + 1 for (_, w) in self.ops), default=0)

    def lookup(self, x: Generator, word: Word) -> frozenset[Generator]:
        return self.ops.get((x, word), frozenset())

    def __eq__(self, other) -> bool:
        return (isinstance(other, TypeAStructure)
                and self.generators == other.generators
                and self.ops == other.ops)

    def __hash__(self) -> int:
        return hash((self.generators, frozenset(self.ops.items())))

    def __repr__(self) -> str:
        return f"TypeAStructure({len(self.generators)} generators, {len(self.ops)} entries)"


_FACTORIZATIONS: dict[BasisElement, list[tuple[BasisElement, BasisElement]]] = defaultdict(list)
for (_a, _b), _c in {
    (BasisElement.R1, BasisElement.R2): BasisElement.R12,
    (BasisElement.R2, BasisElement.R3): BasisElement.R23,
    (BasisElement.R1, BasisElement.R23): BasisElement.R123,
    (BasisElement.R12, BasisElement.R3): BasisElement.R123,
}.items():
    _FACTORIZATIONS[_c].append((_a, _b))


def _relation_sum(a: TypeAStructure, x: Generator, word: Word) -> set[Generator]:
    """GF(2) value of the structure equation at ``(x, word)``.

    Sums ``m(m(x, prefix), suffix)`` over all splits and
    ``m(x, word with one adjacent product contracted)`` over all nonzero
    contractions.
    """
    acc: set[Generator] = set()
    k = len(word) + 1
    for j in range(1, k + 1):
        inner = a.lookup(x, word[:j - 1])
        if not inner:
            continue
        suffix = word[j - 1:]
        for z in inner:
            acc ^= a.lookup(z, suffix)
    for j in range(1, k - 1):
        c = basis_mul(word[j - 1], word[j])
        if c is None:
            continue
        acc ^= a.lookup(x, word[:j - 1] + (c,) + word[j + 1:])
    return acc


def check_type_a(a: TypeAStructure) -> bool:
    """Decide the type A structure equation.

    The equation quantifies over every idempotent-coherent Reeb word of
    length below twice the maximal arity, but a word can only contribute
    a nonzero term when it is either the concatenation of two stored
    words or a one-letter expansion of a stored word (using
    ``r12 = r1*r2`` and friends); it suffices to test those candidates.
    """
    by_gen: dict[Generator, list[Word]] = defaultdict(list)
    for (x, word) in a.ops:
        by_gen[x].append(word)
    candidates: dict[Generator, set[Word]] = defaultdict(set)
    for (x, w1), outs in a.ops.items():
        for z in outs:
            for w2 in by_gen.get(z, []):
                candidates[x].add(w1 + w2)
    for (x, word) in a.ops:
        cands = candidates[x]
        for i, letter in enumerate(word):
            for d, e in _FACTORIZATIONS.get(letter, []):
                cands.add(word[:i] + (d, e) + word[i + 1:])
    for x, words in candidates.items():
        for word in words:
            if _relation_sum(a, x, word):
                return False
    return True


def is_nice_a(a: TypeAStructure) -> bool:
    """True when no stored operation has arity above 2."""
    return a.max_arity <= 2


@dataclass(frozen=True)
class DAGenerator:
    """A generator of a type DA structure, decorated on both sides."""

    name: str
    left_idem: BasisElement
    right_idem: BasisElement

    def __post_init__(self):
        for i in (self.left_idem, self.right_idem):
            if not isinstance(i, BasisElement) or not i.is_idempotent:
                raise ValueError(f"DA generator {self.name!r} needs idempotent decorations")

    def __repr__(self) -> str:
        return f"{self.name}[{self.left_idem.value}|{self.right_idem.value}]"


class TypeDAStructure:
    """Bimodule table ``(x, word) -> GF(2) set of (label, generator)``.

    The word holds the Reeb arguments consumed on the right; each output
    pairs one emitted basis element (matched against left idempotents)
    with a generator.
    """

    def __init__(self, generators: Iterable[DAGenerator],
                 deltas: Mapping[tuple[DAGenerator, Word],
                                 Iterable[tuple[BasisElement, DAGenerator]]]):
        gens = tuple(generators)
        seen: set[str] = set()
        for g in gens:
            if g.name in seen:
                raise ValueError(f"duplicate generator name {g.name!r}")
            seen.add(g.name)
        self.generators = gens
        gen_set = set(gens)
        table: dict[tuple[DAGenerator, Word],
                    frozenset[tuple[BasisElement, DAGenerator]]] = {}
        for (x, word), outs in deltas.items():
            if x not in gen_set:
                raise UnknownGenerator(f"delta on unknown generator {x!r}")
            word = tuple(word)
            end = _check_word(x.right_idem, word, f"delta({x.name}, ...)")
            outset = frozenset(outs)
            for label, z in outset:
                if z not in gen_set:
                    raise UnknownGenerator(f"delta output {z!r} not in structure")
                if z.right_idem is not end:
                    raise IncompatibleIdempotents(
                        f"delta({x.name}, ...) output {z.name} breaks the right chain")
                if source_idem(label) is not x.left_idem or target_idem(label) is not z.left_idem:
                    raise IncompatibleIdempotents(
                        f"delta({x.name}, ...) emitted {label.value} "
                        f"breaks the left chain to {z.name}")
            if outset:
                table[(x, word)] = outset
        self.deltas = table

    @property
    def max_arity(self) -> int:
        return max((len(w) + 1 for (_, w) in self.deltas), default=0)

    def lookup(self, x: DAGenerator, word: Word) -> frozenset[tuple[BasisElement, DAGenerator]]:
        return self.deltas.get((x, word), frozenset())

    def __eq__(self, other) -> bool:
        return (isinstance(other, TypeDAStructure)
                and self.generators == other.generators
                and self.deltas == other.deltas)

    def __hash__(self) -> int:
        return hash((self.generators, frozenset(self.deltas.items())))

    def __repr__(self) -> str:
        return f"TypeDAStructure({len(self.generators)} generators, {len(self.deltas)} entries)"


class MorphismA:
    """A degree-preserving map between type A structures.

    Components are keyed like type A operations: ``(x, word)`` maps to a
    GF(2) set of target generators sitting in the idempotent reached by
    the word.
    """

    def __init__(self, components: Mapping[tuple[Generator, Word], Iterable[Generator]]):
        table: dict[tuple[Generator, Word], frozenset[Generator]] = {}
        for (x, word), outs in components.items():
            word = tuple(word)
            end = _check_word(x.idem, word, f"component({x.name}, ...)")
            outset = frozenset(outs)
            for z in outset:
                if z.idem is not end:
                    raise IncompatibleIdempotents(
                        f"component({x.name}, ...) output {z.name} has wrong idempotent")
            if outset:
                table[(x, word)] = outset
        self.components = table

    def __eq__(self, other) -> bool:
        return isinstance(other, MorphismA) and self.components == other.components

    def __repr__(self) -> str:
        return f"MorphismA({len(self.components)} components)"


__all__ = [
    "DAGenerator",
    "Edge",
    "Generator",
    "MorphismA",
    "TypeAStructure",
    "TypeDAStructure",
    "TypeDStructure",
    "Word",
    "check_type_a",
    "check_type_d",
    "delta_k",
    "is_bounded_d",
    "is_nice_a",
]
