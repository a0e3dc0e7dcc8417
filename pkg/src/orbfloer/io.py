"""Text file format for structures, with a deterministic serializer.

Grammar (one record per line, ``#`` starts a comment)::

    typeD | typeA | typeDA                    header, first record
    gen <name> <i1|i2>                        generator (typeD, typeA)
    gen <name> <i1|i2> <i1|i2>                generator (typeDA: left, right)
    edge <from> <to> <label>                  typeD only
    op <gen> ; <label>* -> <gen>              typeA only (empty list = m_1)
    da <gen> ; <label>* -> <label> <gen>      typeDA only

Labels use the token set ``i1 i2 r1 r2 r3 r12 r23 r123``.  Repeated
``edge``/``op``/``da`` records cancel in pairs (GF(2)).  Serialization
is deterministic: generators keep their stored order and records are
sorted, so identical structures produce byte-identical files.
"""

from __future__ import annotations

from .algebra import BASIS_ORDER, BasisElement, parse_basis_token
from .errors import DuplicateGenerator, ParseError, UnknownToken
from .structures import (
    DAGenerator,
    Generator,
    TypeAStructure,
    TypeDAStructure,
    TypeDStructure,
    Word,
)

Structure = TypeDStructure | TypeAStructure | TypeDAStructure

_HEADERS = ("typeD", "typeA", "typeDA")


def _parse_label(token: str, line_no: int) -> BasisElement:
    label = parse_basis_token(token)
    if label is None:
        raise UnknownToken(f"unknown label {token!r}", line_no)
    return label


def _parse_idem(token: str, line_no: int) -> BasisElement:
    label = _parse_label(token, line_no)
    if not label.is_idempotent:
        raise ParseError(f"expected an idempotent, got {token!r}", line_no)
    return label


def _split_op_tokens(tokens: list[str], line_no: int,
                     keyword: str) -> tuple[str, list[str], list[str]]:
    """Split ``<keyword> <gen> ; ... -> ...`` into (gen, words, tail)."""
    if len(tokens) < 4 or tokens[2] != ";":
        raise ParseError(f"malformed {keyword} record", line_no)
    try:
        arrow = tokens.index("->", 3)
    except ValueError:
        raise ParseError(f"missing '->' in {keyword} record", line_no) from None
    return tokens[1], tokens[3:arrow], tokens[arrow + 1:]


def parse(text: str) -> Structure:
    """Parse a structure file; inverse of :func:`serialize`."""
    header: str | None = None
    gen_order: list[str] = []
    gen_idems: dict[str, tuple[BasisElement, ...]] = {}
    edges: list[tuple[str, str, BasisElement, int]] = []
    ops: dict[tuple[str, Word], set[str]] = {}
    das: dict[tuple[str, Word], set[tuple[BasisElement, str]]] = {}

    def known(name: str, line_no: int) -> str:
        if name not in gen_idems:
            raise ParseError(f"unknown generator {name!r}", line_no)
        return name

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if header is None:
            if len(tokens) != 1 or tokens[0] not in _HEADERS:
                raise ParseError(f"expected header {'/'.join(_HEADERS)}", line_no)
            header = tokens[0]
            continue
        record = tokens[0]
        if record == "gen":
            want = 4 if header == "typeDA" else 3
            if len(tokens) != want:
                raise ParseError("malformed gen record", line_no)
            name = tokens[1]
            if name in gen_idems:
                raise DuplicateGenerator(f"generator {name!r} declared twice", line_no)
            gen_idems[name] = tuple(_parse_idem(t, line_no) for t in tokens[2:])
            gen_order.append(name)
        elif record == "edge" and header == "typeD":
            if len(tokens) != 4:
                raise ParseError("malformed edge record", line_no)
            frm, to = known(tokens[1], line_no), known(tokens[2], line_no)
            edges.append((frm, to, _parse_label(tokens[3], line_no), line_no))
        elif record == "op" and header == "typeA":
            name, word_tokens, tail = _split_op_tokens(tokens, line_no, "op")
            if len(tail) != 1:
                raise ParseError("op record must end with a single generator", line_no)
            word = tuple(_parse_label(t, line_no) for t in word_tokens)
            if any(b.is_idempotent for b in word):
                raise ParseError("idempotent label in operation word", line_no)
            key = (known(name, line_no), word)
            ops.setdefault(key, set()).symmetric_difference_update({known(tail[0], line_no)})
        elif record == "da" and header == "typeDA":
            name, word_tokens, tail = _split_op_tokens(tokens, line_no, "da")
            if len(tail) != 2:
                raise ParseError("da record must end with a label and a generator", line_no)
            word = tuple(_parse_label(t, line_no) for t in word_tokens)
            if any(b.is_idempotent for b in word):
                raise ParseError("idempotent label in operation word", line_no)
            out = (_parse_label(tail[0], line_no), known(tail[1], line_no))
            das.setdefault((known(name, line_no), word), set()).symmetric_difference_update({out})
        else:
            raise ParseError(f"unexpected record {record!r} for {header}", line_no)

    if header is None:
        raise ParseError("empty file: missing header", 1)
    if header == "typeD":
        gens = {n: Generator(n, gen_idems[n][0]) for n in gen_order}
        return TypeDStructure([gens[n] for n in gen_order],
                              [(gens[f], gens[t], lab) for f, t, lab, _ in edges])
    if header == "typeA":
        gens = {n: Generator(n, gen_idems[n][0]) for n in gen_order}
        return TypeAStructure(
            [gens[n] for n in gen_order],
            {(gens[n], w): {gens[o] for o in outs}
             for (n, w), outs in ops.items() if outs})
    da_gens = {n: DAGenerator(n, *gen_idems[n]) for n in gen_order}
    return TypeDAStructure(
        [da_gens[n] for n in gen_order],
        {(da_gens[n], w): {(lab, da_gens[o]) for lab, o in outs}
         for (n, w), outs in das.items() if outs})


def _word_key(word: Word) -> tuple:
    return (len(word), tuple(BASIS_ORDER[b] for b in word))


def serialize(s: Structure) -> str:
    """Canonical text form of a structure; inverse of :func:`parse`."""
    lines: list[str] = []
    index = {g.name: i for i, g in enumerate(s.generators)}
    if isinstance(s, TypeDStructure):
        lines.append("typeD")
        lines.extend(f"gen {g.name} {g.idem.value}" for g in s.generators)
        edges = sorted(s.edges,
                       key=lambda e: (index[e.frm.name], index[e.to.name],
                                      BASIS_ORDER[e.label]))
        lines.extend(f"edge {e.frm.name} {e.to.name} {e.label.value}" for e in edges)
    elif isinstance(s, TypeAStructure):
        lines.append("typeA")
        lines.extend(f"gen {g.name} {g.idem.value}" for g in s.generators)
        records = sorted(
            ((x, word, z) for (x, word), outs in s.ops.items() for z in outs),
            key=lambda r: (index[r[0].name], _word_key(r[1]), index[r[2].name]))
        for x, word, z in records:
            tokens = ["op", x.name, ";", *(b.value for b in word), "->", z.name]
            lines.append(" ".join(tokens))
    elif isinstance(s, TypeDAStructure):
        lines.append("typeDA")
        lines.extend(f"gen {g.name} {g.left_idem.value} {g.right_idem.value}"
                     for g in s.generators)
        records = sorted(
            ((x, word, lab, z) for (x, word), outs in s.deltas.items()
             for lab, z in outs),
            key=lambda r: (index[r[0].name], _word_key(r[1]),
                           BASIS_ORDER[r[2]], index[r[3].name]))
        for x, word, lab, z in records:
            tokens = ["da", x.name, ";", *(b.value for b in word),
                      "->", lab.value, z.name]
            lines.append(" ".join(tokens))
    else:
        raise TypeError(f"cannot serialize {type(s).__name__}")
    return "\n".join(lines) + "\n"


__all__ = ["Structure", "parse", "serialize"]
