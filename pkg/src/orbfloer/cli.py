"""Command-line interface.

Subcommands::

    check <structure>                 PASS/FAIL of the structure equation
    dn <n> [-o FILE]                  emit the r23 cycle of length n
    box <typeA> <typeD>               pairing summary and homology rank
    orbextend <typeA> <n> [-o FILE]   copy-and-shift extension
    hfo <typeA> <n1> [n2 ...]         iterated orbifold homology rank
    reduce <typeD> [-o FILE]          cancel idempotent-labeled edges
    verify-lemma42 <typeA> <n>        PASS/FAIL of the extension witness

Structure arguments are file paths or catalog names: ``solid-torus``,
``lens:<p>``, ``identity-da``, ``random:<seed>``.  Rank output is a
single line ``rank <k>``.  Exit codes: 0 success/PASS, 1 FAIL,
2 usage or malformed input.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .catalog import identity_da, lens_space_cfa, random_type_a, solid_torus_cfd
from .errors import OrbfloerError
from .homology import edge_reduce, homology_rank
from .io import Structure, parse, serialize
from .orbifold import d_n, hfo, lemma42_witness, orb_extend
from .structures import (
    TypeAStructure,
    TypeDAStructure,
    TypeDStructure,
    check_type_a,
    check_type_d,
)
from .tensor import box_a_d


def _resolve(arg: str) -> Structure:
    if arg == "solid-torus":
        return solid_torus_cfd()
    if arg == "identity-da":
        return identity_da()
    if m := re.fullmatch(r"lens:(\d+)", arg):
        return lens_space_cfa(int(m.group(1)))
    if m := re.fullmatch(r"random:(\d+)", arg):
        return random_type_a(int(m.group(1)))
    return parse(Path(arg).read_text())


def _expect(arg: str, kind: type, what: str) -> Structure:
    s = _resolve(arg)
    if not isinstance(s, kind):
        raise OrbfloerError(f"{arg}: expected a {what} structure")
    return s


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _cmd_check(args) -> int:
    s = _resolve(args.structure)
    if isinstance(s, TypeDStructure):
        ok = check_type_d(s)
    elif isinstance(s, TypeAStructure):
        ok = check_type_a(s)
    else:  # type DA: construction already validated the idempotent bookkeeping
        ok = isinstance(s, TypeDAStructure)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_dn(args) -> int:
    _emit(serialize(d_n(args.n)), args.output)
    return 0


def _cmd_box(args) -> int:
    a = _expect(args.type_a, TypeAStructure, "type A")
    d = _expect(args.type_d, TypeDStructure, "type D")
    c = box_a_d(a, d)
    print(f"generators {len(c.generators)}")
    print(f"boundary-entries {len(c.boundary.entries)}")
    print(f"rank {homology_rank(c)}")
    return 0


def _cmd_orbextend(args) -> int:
    a = _expect(args.type_a, TypeAStructure, "type A")
    _emit(serialize(orb_extend(a, args.n)), args.output)
    return 0


def _cmd_hfo(args) -> int:
    a = _expect(args.type_a, TypeAStructure, "type A")
    print(f"rank {hfo(a, args.orders)}")
    return 0


def _cmd_reduce(args) -> int:
    d = _expect(args.type_d, TypeDStructure, "type D")
    _emit(serialize(edge_reduce(d)), args.output)
    return 0


def _cmd_verify_lemma42(args) -> int:
    a = _expect(args.type_a, TypeAStructure, "type A")
    _, ok = lemma42_witness(a, args.n)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbfloer",
        description="Bordered-algebra calculator for cyclic orbifold invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a structure file")
    p.add_argument("structure")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("dn", help="emit the r23 cycle of length n")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_dn)

    p = sub.add_parser("box", help="pair a type A with a type D structure")
    p.add_argument("type_a", metavar="typeA")
    p.add_argument("type_d", metavar="typeD")
    p.set_defaults(func=_cmd_box)

    p = sub.add_parser("orbextend", help="copy-and-shift extension")
    p.add_argument("type_a", metavar="typeA")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_orbextend)

    p = sub.add_parser("hfo", help="iterated orbifold homology rank")
    p.add_argument("type_a", metavar="typeA")
    p.add_argument("orders", metavar="n", type=int, nargs="+")
    p.set_defaults(func=_cmd_hfo)

    p = sub.add_parser("reduce", help="cancel idempotent-labeled edges")
    p.add_argument("type_d", metavar="typeD")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify-lemma42", help="check the extension witness")
    p.add_argument("type_a", metavar="typeA")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_verify_lemma42)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (OrbfloerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
