"""Independent oracles and fixtures shared across the test modules.

Everything here is deliberately written from scratch against the
published definitions rather than by calling back into the package
internals: the multiplication table is a frozen literal, the structure
equation checker enumerates *all* coherent Reeb words up to a length
bound, and the rank oracle is textbook elimination on dense 0/1 lists.
"""

from __future__ import annotations

import random
from itertools import product

from orbfloer import Gf2Matrix, TypeAStructure, TypeDStructure
from orbfloer.algebra import BasisElement
from orbfloer.structures import Generator

# --------------------------------------------------------------------------
# frozen algebra tables (string keyed, independent of orbfloer.algebra)

IDEMS = ("i1", "i2")
REEBS = ("r1", "r2", "r3", "r12", "r23", "r123")

SRC = {"r1": "i1", "r2": "i2", "r3": "i1", "r12": "i1", "r23": "i2", "r123": "i1"}
TGT = {"r1": "i2", "r2": "i1", "r3": "i2", "r12": "i1", "r23": "i2", "r123": "i2"}

NONZERO_PRODUCTS = {
    ("r1", "r2"): "r12",
    ("r2", "r3"): "r23",
    ("r1", "r23"): "r123",
    ("r12", "r3"): "r123",
}

SHIFTING = {"r3", "r23", "r123"}


def oracle_mul(a: str, b: str) -> str | None:
    """Product of two basis elements, or ``None`` for zero."""
    if a in IDEMS and b in IDEMS:
        return a if a == b else None
    if a in IDEMS:
        return b if SRC[b] == a else None
    if b in IDEMS:
        return a if TGT[a] == b else None
    return NONZERO_PRODUCTS.get((a, b))


def oracle_table() -> dict[tuple[str, str], str | None]:
    return {(a, b): oracle_mul(a, b) for a, b in product(IDEMS + REEBS, repeat=2)}


# --------------------------------------------------------------------------
# brute-force structure equation for type A tables

PlainTable = dict[tuple[str, tuple[str, ...]], frozenset[str]]


def plain_table(a: TypeAStructure) -> tuple[PlainTable, dict[str, str]]:
    """Strip a structure down to string-keyed operations and idempotents."""
    table: PlainTable = {}
    for (g, word), outs in a.ops.items():
        table[(g.name, tuple(b.value for b in word))] = frozenset(o.name for o in outs)
    idems = {g.name: g.idem.value for g in a.generators}
    return table, idems


def coherent_words(start: str, maxlen: int):
    """All Reeb words of length 1..maxlen chaining from idempotent ``start``."""
    frontier: list[tuple[tuple[str, ...], str]] = [((), start)]
    for _ in range(maxlen):
        grown = []
        for word, at in frontier:
            for r in REEBS:
                if SRC[r] == at:
                    grown.append((word + (r,), TGT[r]))
        yield from (w for w, _ in grown)
        frontier = grown


def oracle_apply(table: PlainTable, idems: dict[str, str], name: str,
                 word: tuple[str, ...]) -> frozenset[str]:
    """Strictly unital action: table lookup, identity, or zero."""
    if all(tok in REEBS for tok in word):
        return table.get((name, word), frozenset())
    if len(word) == 1 and word[0] == idems[name]:
        return frozenset([name])
    return frozenset()


def oracle_relation(table: PlainTable, idems: dict[str, str], name: str,
                    word: tuple[str, ...]) -> set[str]:
    """GF(2) sum of all compositions and contractions on one input."""
    acc: set[str] = set()
    for j in range(len(word) + 1):
        for mid in oracle_apply(table, idems, name, word[:j]):
            acc ^= oracle_apply(table, idems, mid, word[j:])
    for j in range(len(word) - 1):
        prod = oracle_mul(word[j], word[j + 1])
        if prod is not None:
            acc ^= oracle_apply(table, idems, name,
                                word[:j] + (prod,) + word[j + 2:])
    return acc


def oracle_check_type_a(a: TypeAStructure, maxlen: int = 6) -> bool:
    """Evaluate the structure equation on every coherent word up to ``maxlen``.

    Complete whenever every stored word has length at most ``maxlen // 2``:
    a nonzero composition needs both halves in the table and a nonzero
    contraction needs the contracted word in the table.
    """
    table, idems = plain_table(a)
    longest = max((len(w) for _, w in table), default=0)
    assert 2 * longest <= maxlen, "word bound too small for a complete check"
    for g in a.generators:
        name, start = g.name, g.idem.value
        if oracle_relation(table, idems, name, ()):
            return False
        for word in coherent_words(start, maxlen):
            if oracle_relation(table, idems, name, word):
                return False
    return True


# --------------------------------------------------------------------------
# dense GF(2) rank

def rank_oracle(dense: list[list[int]]) -> int:
    rows = [list(r) for r in dense]
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def to_dense(m: Gf2Matrix) -> list[list[int]]:
    return [[1 if (i, j) in m.entries else 0 for j in range(m.cols)]
            for i in range(m.rows)]


# --------------------------------------------------------------------------
# fixtures

_B = BasisElement


def twist_fixture() -> TypeAStructure:
    """Four-generator system with an arity-3 operation on ``(r23, r23)``.

    The lower operations are exactly the ones the structure equation
    forces once that top operation is present.
    """
    sy, st = Generator("sy", _B.I2), Generator("st", _B.I2)
    su, sz = Generator("su", _B.I1), Generator("sz", _B.I2)
    return TypeAStructure([sy, st, su, sz], {
        (sy, (_B.R23, _B.R23)): {sz},
        (sy, (_B.R23, _B.R2)): {su},
        (sy, (_B.R2, _B.R3)): {st},
        (st, (_B.R2,)): {su},
        (st, (_B.R23,)): {sz},
        (su, (_B.R3,)): {sz},
    })


def augmented_type_d(seed: int) -> TypeDStructure:
    """An ``r23`` cycle plus cancellable idempotent pairs.

    Each pair contributes ``a --i1--> b`` together with incoming ``r2``
    edges into ``b`` and outgoing ``r3`` edges out of ``a``, so edge
    reduction replaces the pair by ``r23`` composites into the cycle.
    All two-edge label products vanish, so validity is automatic.
    """
    rng = random.Random(seed)
    m = rng.randint(3, 6)
    cycle = [Generator(f"c{i}", _B.I2) for i in range(1, m + 1)]
    gens = list(cycle)
    edges: list[tuple[Generator, Generator, BasisElement]] = [
        (cycle[i], cycle[(i + 1) % m], _B.R23) for i in range(m)
    ]
    for p in range(rng.randint(1, 2)):
        a = Generator(f"a{p}", _B.I1)
        b = Generator(f"b{p}", _B.I1)
        gens += [a, b]
        edges.append((a, b, _B.I1))
        for w in rng.sample(cycle, rng.randint(1, 2)):
            edges.append((w, b, _B.R2))
        for z in rng.sample(cycle, rng.randint(1, 2)):
            edges.append((a, z, _B.R3))
    return TypeDStructure(gens, edges)
