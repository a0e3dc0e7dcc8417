"""Acceptance gate: one test per published criterion, one line of output each.

Run with ``pytest -v`` to see a pass/fail line per criterion; the
explicit ``PASS`` prints appear with ``-s`` or in failure reports.
"""

from __future__ import annotations

from itertools import permutations, product

from helpers import (
    augmented_type_d,
    oracle_check_type_a,
    oracle_mul,
    twist_fixture,
)
from orbfloer import (
    AlgebraElement,
    BasisElement,
    Generator,
    TypeAStructure,
    basis_mul,
    box_a_d,
    box_a_da,
    box_da_d,
    check_type_a,
    check_type_d,
    d_n,
    edge_reduce,
    hfo,
    homology_rank,
    identity_da,
    is_bounded_d,
    lemma42_witness,
    lens_space_cfa,
    orb_extend,
    parse,
    random_type_a,
    serialize,
    solid_torus_cfd,
    verify_d_squared,
)
from orbfloer.cli import main

B = BasisElement
ALL = tuple(B)


def test_criterion_01_multiplication_table_and_ring_axioms():
    for a, b in product(ALL, repeat=2):
        got = basis_mul(a, b)
        assert (got.value if got else None) == oracle_mul(a.value, b.value), (a, b)
    for a, b, c in product(ALL, repeat=3):
        x, y, z = map(AlgebraElement.from_basis, (a, b, c))
        assert (x * y) * z == x * (y * z), (a, b, c)
    one = AlgebraElement.unit()
    for a in ALL:
        x = AlgebraElement.from_basis(a)
        assert one * x == x and x * one == x
    print("criterion 1 (multiplication table, associativity, unit): PASS")


def test_criterion_02_cycles_are_valid_and_unbounded():
    for n in range(1, 11):
        d = d_n(n)
        assert check_type_d(d), n
        assert not is_bounded_d(d), n
    print("criterion 2 (cycle structures valid and unbounded): PASS")


def test_criterion_03_large_population_of_validated_type_a_structures():
    population = [random_type_a(seed) for seed in range(100)]
    population += [lens_space_cfa(p) for p in (1, 2, 3, 5)]
    population.append(twist_fixture())
    population += [
        orb_extend(random_type_a(seed), n)
        for seed in range(80)
        for n in (1, 2, 3, 4, 5)
    ]
    assert len(population) >= 500
    for a in population:
        assert check_type_a(a)

    # cross-validate the checker against exhaustive word enumeration
    sample = [lens_space_cfa(1), lens_space_cfa(3), twist_fixture()]
    sample += [random_type_a(seed) for seed in range(10)]
    sample += [
        orb_extend(random_type_a(0), 2),
        orb_extend(random_type_a(1), 3),
        orb_extend(twist_fixture(), 3),
    ]
    for a in sample:
        assert check_type_a(a) and oracle_check_type_a(a)
    y, z = Generator("y", B.I2), Generator("z", B.I2)
    invalid = [
        TypeAStructure([y], {(y, ()): {y}}),
        TypeAStructure([y, z], {(y, (B.R23, B.R23)): {z}}),
    ]
    for a in invalid:
        assert not check_type_a(a) and not oracle_check_type_a(a)
    print(f"criterion 3 ({len(population)} structures validated, "
          "checker matches exhaustive oracle): PASS")


def test_criterion_04_extension_witness_population():
    cases = [lens_space_cfa(p) for p in (1, 2, 3, 5)] + [twist_fixture()]
    cases += [random_type_a(seed) for seed in range(25)]
    runs = 0
    for a in cases:
        for n in (1, 2, 3, 4, 5):
            ext = orb_extend(a, n)
            assert check_type_a(ext)
            _, ok = lemma42_witness(a, n)
            assert ok, (a, n)
            runs += 1
    print(f"criterion 4 (extension witness on {runs} cases): PASS")


def test_criterion_05_frozen_two_order_ranks():
    assert hfo(lens_space_cfa(2), [2, 2]) == 8
    assert hfo(lens_space_cfa(3), [2, 3]) == 18
    assert hfo(lens_space_cfa(5), [3, 2]) == 30
    print("criterion 5 (frozen two-order ranks 8/18/30): PASS")


def test_criterion_06_single_order_ranks_scale_linearly():
    for p in (1, 2, 3, 5):
        a = lens_space_cfa(p)
        assert hfo(a, [1]) == p
        for n in (2, 3, 4, 5):
            assert hfo(a, [n]) == p * n, (p, n)
    print("criterion 6 (single-order ranks p*n, trivial order p): PASS")


def test_criterion_07_rank_is_independent_of_order_sequence():
    for p in (2, 3):
        a = lens_space_cfa(p)
        ranks = {hfo(a, list(perm)) for perm in permutations((2, 3, 4))}
        assert ranks == {p * 24}, (p, ranks)
    print("criterion 7 (all orderings of (2,3,4) give p*24): PASS")


def test_criterion_08_every_pairing_squares_to_zero():
    a_side = [lens_space_cfa(p) for p in (1, 2, 3, 5)] + [twist_fixture()]
    a_side += [random_type_a(seed) for seed in range(10)]
    d_side = [d_n(n) for n in (1, 2, 3, 4, 5)]
    for seed in range(10):
        d = augmented_type_d(seed)
        d_side += [d, edge_reduce(d)]
    boxes = 0
    for a in a_side:
        for d in d_side:
            assert verify_d_squared(box_a_d(a, d)), (a, d)
            boxes += 1
    ida = identity_da()
    for a in a_side:
        assert check_type_a(box_a_da(a, ida))
    for d in d_side:
        assert check_type_d(box_da_d(ida, d))
    print(f"criterion 8 (d-squared vanishes on {boxes} pairings, "
          "bimodule pairings validate): PASS")


def test_criterion_09_cancellation_preserves_pairing_homology():
    for seed in range(25):
        d = augmented_type_d(seed)
        assert check_type_d(d)
        r = edge_reduce(d)
        assert check_type_d(r)
        assert not any(e.label.is_idempotent for e in r.edges)
        for a in (random_type_a(seed), lens_space_cfa(2)):
            assert homology_rank(box_a_d(a, d)) == homology_rank(box_a_d(a, r))
    print("criterion 9 (25 reductions, pairing homology unchanged): PASS")


def test_criterion_10_file_format_and_cli_contract(tmp_path, capsys):
    catalog = [solid_torus_cfd(), identity_da()]
    catalog += [lens_space_cfa(p) for p in (1, 2, 3, 5)]
    catalog += [random_type_a(seed) for seed in range(10)]
    catalog += [d_n(n) for n in (2, 3, 7)]
    for s in catalog:
        assert parse(serialize(s)) == s

    assert main(["hfo", "lens:3", "2", "3"]) == 0
    assert capsys.readouterr().out == "rank 18\n"

    broken = tmp_path / "broken.txt"
    broken.write_text("typeD\ngen x1 i2\nedge x1 x9 r23\n")
    assert main(["check", str(broken)]) == 2
    err = capsys.readouterr().err
    assert err.count("\n") == 1 and "line 3" in err
    print("criterion 10 (round trips, exact CLI rank line, "
          "malformed input diagnostics): PASS")
