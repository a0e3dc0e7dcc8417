"""Homology ranks, the d-squared check, and edge cancellation."""

from __future__ import annotations

import pytest

from helpers import augmented_type_d, rank_oracle, to_dense
from orbfloer import (
    ChainComplex,
    Generator,
    Gf2Matrix,
    InvalidStructure,
    NotAComplex,
    TypeDStructure,
    box_a_d,
    check_type_d,
    d_n,
    edge_reduce,
    homology_rank,
    lens_space_cfa,
    random_type_a,
    verify_d_squared,
)
from orbfloer.algebra import BasisElement as B


def complex_of(entries, n):
    return ChainComplex(tuple(f"g{i}" for i in range(n)),
                        Gf2Matrix.from_entries(n, n, entries))


def test_d_squared_accepts_a_two_step_cancellation():
    # boundary g1 -> g0 and g2 -> g0 composes to nothing
    c = complex_of([(0, 1), (0, 2)], 3)
    assert verify_d_squared(c)


def test_d_squared_rejects_a_composable_chain():
    # boundary g2 -> g1 -> g0 survives composition
    c = complex_of([(1, 2), (0, 1)], 3)
    assert not verify_d_squared(c)
    with pytest.raises(NotAComplex):
        homology_rank(c)


def test_homology_of_zero_boundary_counts_generators():
    assert homology_rank(complex_of([], 5)) == 5
    assert homology_rank(ChainComplex((), Gf2Matrix.from_entries(0, 0, []))) == 0


def test_homology_subtracts_twice_the_boundary_rank():
    c = complex_of([(0, 1)], 2)
    assert homology_rank(c) == 0
    c = complex_of([(0, 2), (1, 2)], 3)
    assert homology_rank(c) == 1
    assert homology_rank(c) == len(c.generators) - 2 * rank_oracle(to_dense(c.boundary))


# --------------------------------------------------------------------------
# edge cancellation


def pattern_structure():
    """One cancellable pair: w --r2--> b, a --i1--> b, a --r3--> z."""
    w, z = Generator("w", B.I2), Generator("z", B.I2)
    a, b = Generator("a", B.I1), Generator("b", B.I1)
    d = TypeDStructure([w, a, b, z], [(a, b, B.I1), (w, b, B.R2), (a, z, B.R3)])
    assert check_type_d(d)
    return d


def test_cancellation_composes_the_zig_zag():
    r = edge_reduce(pattern_structure())
    assert [g.name for g in r.generators] == ["w", "z"]
    assert [(e.frm.name, e.to.name, e.label) for e in r.edges] == [("w", "z", B.R23)]
    assert check_type_d(r)


def test_cancellation_can_cascade_to_nothing():
    # removing a0 -> b0 creates a fresh idempotent edge c0 -> d0
    a0, b0 = Generator("a0", B.I1), Generator("b0", B.I1)
    c0, d0 = Generator("c0", B.I1), Generator("d0", B.I1)
    d = TypeDStructure([a0, b0, c0, d0],
                       [(a0, b0, B.I1), (c0, b0, B.I1), (a0, d0, B.I1)])
    r = edge_reduce(d)
    assert r.generators == ()
    assert r.edges == frozenset()


def test_structures_without_idempotent_edges_are_untouched():
    d = d_n(4)
    assert edge_reduce(d) == d


def test_idempotent_loops_are_not_cancelled():
    x = Generator("x", B.I1)
    d = TypeDStructure([x], [(x, x, B.I1)])
    assert not check_type_d(d)  # the loop squares to itself
    with pytest.raises(InvalidStructure):
        edge_reduce(d)


def test_invalid_structures_are_rejected():
    x, y = Generator("x", B.I1), Generator("y", B.I2)
    bad = TypeDStructure([x, y], [(x, y, B.R1), (y, x, B.R2)])
    with pytest.raises(InvalidStructure):
        edge_reduce(bad)


@pytest.mark.parametrize("seed", range(10))
def test_cancellation_preserves_pairing_homology(seed):
    d = augmented_type_d(seed)
    r = edge_reduce(d)
    assert check_type_d(r)
    assert len(r.generators) < len(d.generators)
    for a in (random_type_a(seed), lens_space_cfa(2)):
        before = box_a_d(a, d)
        after = box_a_d(a, r)
        assert verify_d_squared(before)
        assert verify_d_squared(after)
        assert homology_rank(before) == homology_rank(after)


def test_reduction_is_idempotent():
    for seed in range(5):
        r = edge_reduce(augmented_type_d(seed))
        assert edge_reduce(r) == r
