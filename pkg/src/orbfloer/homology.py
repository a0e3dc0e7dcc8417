"""Homology ranks of chain complexes and edge reduction of type D structures.

Over GF(2) the homology rank of a finite complex is
``#generators - 2 * rank(boundary)``; no torsion bookkeeping is needed.

``edge_reduce`` repeatedly cancels an idempotent-labeled edge ``x -> y``
(never a self-loop): the endpoints disappear and every zig-zag
``w -> y``, ``x -> z`` through the canceled edge contributes a composite
edge ``w -> z`` labeled by the product of the outer labels, accumulating
modulo 2.  The result is homotopy equivalent to the input and carries no
idempotent-labeled edges.
"""

from __future__ import annotations

from collections import defaultdict

from .algebra import BASIS_ORDER, BasisElement, basis_mul
from .errors import InvalidStructure, NotAComplex
from .gf2 import rank_gf2
from .structures import Generator, TypeDStructure, check_type_d
from .tensor import ChainComplex


def verify_d_squared(c: ChainComplex) -> bool:
    """True when the boundary map squares to zero."""
    cols = c.boundary.column_sets()
    for j in range(c.boundary.cols):
        acc: set[int] = set()
        for i in cols[j]:
            acc ^= cols[i]
        if acc:
            return False
    return True


def homology_rank(c: ChainComplex) -> int:
    """GF(2) dimension of the homology of ``c``."""
    if not verify_d_squared(c):
        raise NotAComplex("boundary does not square to zero")
    return len(c.generators) - 2 * rank_gf2(c.boundary)


def _pick_cancel_edge(d: TypeDStructure) -> tuple[Generator, Generator, BasisElement] | None:
    """Lowest-index idempotent-labeled non-loop edge, or ``None``."""
    gen_index = {g: i for i, g in enumerate(d.generators)}
    best = None
    for e in d.edges:
        if not e.label.is_idempotent or e.frm == e.to:
            continue
        key = (gen_index[e.frm], gen_index[e.to], BASIS_ORDER[e.label])
        if best is None or key < best[0]:
            best = (key, (e.frm, e.to, e.label))
    return best[1] if best else None


def edge_reduce(d: TypeDStructure) -> TypeDStructure:
    """Cancel idempotent-labeled edges until none remain.

    The input must satisfy the type D structure equation; cancellation
    order is deterministic (lowest generator indices first).
    """
    if not check_type_d(d):
        raise InvalidStructure("edge reduction requires a valid type D structure")
    generators = list(d.generators)
    edges = {(e.frm, e.to, e.label) for e in d.edges}
    while True:
        current = TypeDStructure(generators, edges)
        cancel = _pick_cancel_edge(current)
        if cancel is None:
            return current
        x, y, _ = cancel
        removed = {x, y}
        into_y = [(frm, label) for (frm, to, label) in edges
                  if to == y and frm not in removed]
        out_of_x = [(to, label) for (frm, to, label) in edges
                    if frm == x and to not in removed]
        parity: dict[tuple[Generator, Generator, BasisElement], int] = defaultdict(int)
        for (frm, to, label) in edges:
            if frm not in removed and to not in removed:
                parity[(frm, to, label)] += 1
        for w, a in into_y:
            for z, b in out_of_x:
                c = basis_mul(a, b)
                if c is not None:
                    parity[(w, z, c)] += 1
        generators = [g for g in generators if g not in removed]
        edges = {e for e, count in parity.items() if count % 2 == 1}


__all__ = ["edge_reduce", "homology_rank", "verify_d_squared"]
