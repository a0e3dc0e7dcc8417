"""The eight-dimensional torus path algebra over GF(2).

The algebra is spanned by two idempotents ``i1``, ``i2`` and six Reeb
elements ``r1``, ``r2``, ``r3``, ``r12``, ``r23``, ``r123``.  Reeb
elements multiply by index concatenation when the indices increase
(``r1*r2 = r12``, ``r2*r3 = r23``, ``r1*r23 = r123``, ``r12*r3 = r123``)
and all other Reeb products vanish; in particular ``r2*r1 = r3*r2 = 0``.
The unit is ``i1 + i2``.

Each Reeb element is a directed arrow between idempotents:

======  ======  ======
label   source  target
======  ======  ======
r1      i1      i2
r2      i2      i1
r3      i1      i2
r12     i1      i1
r23     i2      i2
r123    i1      i2
======  ======  ======

so ``a*b`` is nonzero only when ``target_idem(a) == source_idem(b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class BasisElement(Enum):
    """One of the eight basis elements, named by its text token."""

    I1 = "i1"
    I2 = "i2"
    R1 = "r1"
    R2 = "r2"
    R3 = "r3"
    R12 = "r12"
    R23 = "r23"
    R123 = "r123"

    @property
    def is_idempotent(self) -> bool:
        return self in (BasisElement.I1, BasisElement.I2)

    @property
    def is_reeb(self) -> bool:
        return not self.is_idempotent

    def __repr__(self) -> str:
        return self.value


_B = BasisElement

#: Canonical ordering used for deterministic serialization and sorting.
BASIS_ORDER: dict[BasisElement, int] = {b: i for i, b in enumerate(_B)}

IDEMPOTENTS = (_B.I1, _B.I2)
REEB_ELEMENTS = (_B.R1, _B.R2, _B.R3, _B.R12, _B.R23, _B.R123)

_SOURCE = {
    _B.I1: _B.I1, _B.I2: _B.I2,
    _B.R1: _B.I1, _B.R2: _B.I2, _B.R3: _B.I1,
    _B.R12: _B.I1, _B.R23: _B.I2, _B.R123: _B.I1,
}
_TARGET = {
    _B.I1: _B.I1, _B.I2: _B.I2,
    _B.R1: _B.I2, _B.R2: _B.I1, _B.R3: _B.I2,
    _B.R12: _B.I1, _B.R23: _B.I2, _B.R123: _B.I2,
}

# The four nonzero products of Reeb elements.
_REEB_PRODUCTS = {
    (_B.R1, _B.R2): _B.R12,
    (_B.R2, _B.R3): _B.R23,
    (_B.R1, _B.R23): _B.R123,
    (_B.R12, _B.R3): _B.R123,
}

# Reeb elements whose single torus-boundary strand crosses the marked
# position; consuming one advances an orbifold copy index by one.
_SHIFTING = frozenset({_B.R3, _B.R23, _B.R123})


def source_idem(b: BasisElement) -> BasisElement:
    """The idempotent ``i`` with ``i * b == b``."""
    return _SOURCE[b]


def target_idem(b: BasisElement) -> BasisElement:
    """The idempotent ``i`` with ``b * i == b``."""
    return _TARGET[b]


def basis_mul(a: BasisElement, b: BasisElement) -> BasisElement | None:
    """Product of two basis elements, or ``None`` when it vanishes."""
    if a.is_idempotent:
        if b.is_idempotent:
            return a if a is b else None
        return b if a is _SOURCE[b] else None
    if b.is_idempotent:
        return a if b is _TARGET[a] else None
    return _REEB_PRODUCTS.get((a, b))


def shift_weight(b: BasisElement) -> int:
    """1 for ``r3``, ``r23``, ``r123``; 0 for every other basis element."""
    return 1 if b in _SHIFTING else 0


@dataclass(frozen=True)
class AlgebraElement:
    """A GF(2) sum of basis elements.

    Addition is symmetric difference of supports; multiplication extends
    :func:`basis_mul` bilinearly.
    """

    support: frozenset[BasisElement]

    @classmethod
    def zero(cls) -> AlgebraElement:
        return cls(frozenset())

    @classmethod
    def from_basis(cls, *elements: BasisElement) -> AlgebraElement:
        return cls(frozenset(elements))

    @classmethod
    def unit(cls) -> AlgebraElement:
        return cls(frozenset(IDEMPOTENTS))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.support ^ other.support)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        acc: set[BasisElement] = set()
        for a in self.support:
            for b in other.support:
                c = basis_mul(a, b)
                if c is not None:
                    acc ^= {c}
        return AlgebraElement(frozenset(acc))

    def __bool__(self) -> bool:
        return bool(self.support)

    def __iter__(self):
        return iter(sorted(self.support, key=BASIS_ORDER.__getitem__))

    def __repr__(self) -> str:
        if not self.support:
            return "0"
        return "+".join(b.value for b in self)


def _coerce(x: AlgebraElement | BasisElement) -> AlgebraElement:
    if isinstance(x, BasisElement):
        return AlgebraElement.from_basis(x)
    return x


def mul(a: AlgebraElement | BasisElement, b: AlgebraElement | BasisElement) -> AlgebraElement:
    """Product in the algebra; accepts bare basis elements for convenience."""
    return _coerce(a) * _coerce(b)


def add(a: AlgebraElement | BasisElement, b: AlgebraElement | BasisElement) -> AlgebraElement:
    """Sum in the algebra; accepts bare basis elements for convenience."""
    return _coerce(a) + _coerce(b)


def parse_basis_token(token: str) -> BasisElement | None:
    """Basis element for a text token such as ``"r23"``, or ``None``."""
    try:
        return BasisElement(token)
    except ValueError:
        return None


def word_is_coherent(start: BasisElement, word: Iterable[BasisElement]) -> bool:
    """True when ``word`` chains source-to-target starting at idempotent ``start``."""
    cur = start
    for b in word:
        if _SOURCE[b] is not cur:
            return False
        cur = _TARGET[b]
    return True


__all__ = [
    "AlgebraElement",
    "BASIS_ORDER",
    "BasisElement",
    "IDEMPOTENTS",
    "REEB_ELEMENTS",
    "add",
    "basis_mul",
    "mul",
    "parse_basis_token",
    "shift_weight",
    "source_idem",
    "target_idem",
    "word_is_coherent",
]
