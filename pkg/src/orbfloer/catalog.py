"""Built-in structures: solid torus, lens spaces, the identity bimodule,
and a seeded generator of random valid type A structures.

``random_type_a`` assembles a direct sum of independently valid blocks
rather than rejection-sampling raw tables (a random table essentially
never satisfies the structure equation).  Block kinds:

* *module*: a genuine right module over the algebra.  Generators are
  split into layers ``L0``/``L1`` (idempotent ``i1``) and ``M0``/``M1``
  (idempotent ``i2``); the generating actions are random incidences
  ``r1: L0 -> M``, ``r2: M0 -> L1``, ``r3: L0+L1 -> M1``, which makes
  the two vanishing relations ``r2*r1 = r3*r2 = 0`` hold for free, and
  the composite actions for ``r12``, ``r23``, ``r123`` are filled in.
* *pair*: two generators joined by a differential ``m_1``.
* *link*: one arity-3 operation over a word of primitive letters,
  joining two otherwise inert generators.
* *twist*: a fixed four-generator system whose ``m_3`` consumes
  ``(r23, r23)``, together with the lower operations that the structure
  equation forces.
* *free*: an inert generator.

Every emitted structure is still gated through ``check_type_a``.
"""

from __future__ import annotations

import random

from .algebra import BasisElement, source_idem, target_idem
from .errors import GenerationFailed, InvalidOrder
from .orbifold import d_n
from .structures import (
    DAGenerator,
    Generator,
    TypeAStructure,
    TypeDAStructure,
    TypeDStructure,
    Word,
    check_type_a,
)

_B = BasisElement


def solid_torus_cfd() -> TypeDStructure:
    """Single ``i2`` generator with an ``r23`` self-loop."""
    return d_n(1)


def lens_space_cfa(p: int) -> TypeAStructure:
    """``p`` inert ``i2`` generators; all pairings have trivial boundary."""
    if not isinstance(p, int) or p < 1:
        raise InvalidOrder(f"lens space parameter must be a positive integer, got {p!r}")
    gens = [Generator(f"y{i}", _B.I2) for i in range(1, p + 1)]
    return TypeAStructure(gens, {})


def identity_da() -> TypeDAStructure:
    """The identity bimodule: each Reeb argument is passed straight through."""
    e1 = DAGenerator("e1", _B.I1, _B.I1)
    e2 = DAGenerator("e2", _B.I2, _B.I2)
    by_idem = {_B.I1: e1, _B.I2: e2}
    deltas = {}
    for r in (_B.R1, _B.R2, _B.R3, _B.R12, _B.R23, _B.R123):
        deltas[(by_idem[source_idem(r)], (r,))] = {(r, by_idem[target_idem(r)])}
    return TypeDAStructure([e1, e2], deltas)


_LINK_WORDS: tuple[Word, ...] = (
    (_B.R2, _B.R3),
    (_B.R3, _B.R2),
    (_B.R1, _B.R2),
    (_B.R2, _B.R1),
)


class _Assembler:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.gens: list[Generator] = []
        self.ops: dict[tuple[Generator, Word], set[Generator]] = {}

    def new_gen(self, idem: BasisElement) -> Generator:
        g = Generator(f"g{len(self.gens)}", idem)
        self.gens.append(g)
        return g

    def add_op(self, x: Generator, word: Word, outs: set[Generator]) -> None:
        if outs:
            self.ops[(x, word)] = outs

    def module_block(self, cap: int) -> int:
        rng = self.rng
        sizes = [rng.randint(0, 2) for _ in range(4)]
        if sum(sizes) < 2:
            sizes[rng.randrange(4)] += 2
        while sum(sizes) > cap:
            positive = [i for i, s in enumerate(sizes) if s]
            sizes[rng.choice(positive)] -= 1
        n_l0, n_l1, n_m0, n_m1 = sizes
        l0 = [self.new_gen(_B.I1) for _ in range(n_l0)]
        l1 = [self.new_gen(_B.I1) for _ in range(n_l1)]
        m0 = [self.new_gen(_B.I2) for _ in range(n_m0)]
        m1 = [self.new_gen(_B.I2) for _ in range(n_m1)]

        def incidence(doms: list[Generator], cods: list[Generator],
                      density: float) -> dict[Generator, set[Generator]]:
            return {y: {z for z in cods if rng.random() < density} for y in doms}

        act1 = incidence(l0, m0 + m1, 0.55)
        act2 = incidence(m0, l1, 0.65)
        act3 = incidence(l0 + l1, m1, 0.65)

        def compose(first: dict[Generator, set[Generator]],
                    second: dict[Generator, set[Generator]]) -> dict[Generator, set[Generator]]:
            out: dict[Generator, set[Generator]] = {}
            for y, mids in first.items():
                acc: set[Generator] = set()
                for v in mids:
                    acc ^= second.get(v, set())
                out[y] = acc
            return out

        act12 = compose(act1, act2)
        act23 = compose(act2, act3)
        act123 = compose(act12, act3)
        for label, act in ((_B.R1, act1), (_B.R2, act2), (_B.R3, act3),
                           (_B.R12, act12), (_B.R23, act23), (_B.R123, act123)):
            for y, image in act.items():
                self.add_op(y, (label,), set(image))
        return sum(sizes)

    def pair_block(self, cap: int) -> int:
        idem = self.rng.choice((_B.I1, _B.I2))
        u = self.new_gen(idem)
        v = self.new_gen(idem)
        self.add_op(u, (), {v})
        return 2

    def link_block(self, cap: int) -> int:
        word = self.rng.choice(_LINK_WORDS)
        a = self.new_gen(source_idem(word[0]))
        b = self.new_gen(target_idem(word[-1]))
        self.add_op(a, word, {b})
        return 2

    def twist_block(self, cap: int) -> int:
        y = self.new_gen(_B.I2)
        t = self.new_gen(_B.I2)
        u = self.new_gen(_B.I1)
        z = self.new_gen(_B.I2)
        self.add_op(y, (_B.R23, _B.R23), {z})
        self.add_op(y, (_B.R23, _B.R2), {u})
        self.add_op(y, (_B.R2, _B.R3), {t})
        self.add_op(t, (_B.R2,), {u})
        self.add_op(t, (_B.R23,), {z})
        self.add_op(u, (_B.R3,), {z})
        return 4

    def free_block(self, cap: int) -> int:
        self.new_gen(self.rng.choice((_B.I1, _B.I2)))
        return 1


def _assemble(rng: random.Random, max_generators: int) -> TypeAStructure:
    asm = _Assembler(rng)
    budget = max_generators
    kinds = ("module", "pair", "link", "twist", "free")
    weights = (4, 2, 2, 3, 1)
    costs = {"module": 2, "pair": 2, "link": 2, "twist": 4, "free": 1}
    while budget > 0:
        affordable = [k for k in kinds if costs[k] <= budget]
        kind = rng.choices(affordable,
                           [w for k, w in zip(kinds, weights) if k in affordable])[0]
        budget -= getattr(asm, f"{kind}_block")(budget)
        if asm.gens and rng.random() < 0.25:
            break
    return TypeAStructure(asm.gens, asm.ops)


def random_type_a(seed: int, max_generators: int = 8) -> TypeAStructure:
    """Deterministic random valid type A structure for ``seed``.

    Raises :class:`~orbfloer.errors.GenerationFailed` if no valid
    structure is found within the retry budget.
    """
    if max_generators < 1:
        raise InvalidOrder("max_generators must be at least 1")
    for attempt in range(25):
        rng = random.Random(1_000_003 * seed + attempt)
        a = _assemble(rng, max_generators)
        if check_type_a(a):
            return a
    raise GenerationFailed(f"no valid structure for seed {seed}")


__all__ = [
    "identity_da",
    "lens_space_cfa",
    "random_type_a",
    "solid_torus_cfd",
]
