"""Bordered-algebra calculator for Heegaard Floer invariants of cyclic
3-orbifolds: the torus path algebra, type D/A/DA structures, box tensor
products, edge reduction, and the iterated orbifold homology invariant.
"""

from .algebra import (
    AlgebraElement,
    BasisElement,
    add,
    basis_mul,
    mul,
    shift_weight,
    source_idem,
    target_idem,
)
from .catalog import identity_da, lens_space_cfa, random_type_a, solid_torus_cfd
from .errors import (
    DuplicateGenerator,
    GenerationFailed,
    IncompatibleIdempotents,
    InvalidOrder,
    InvalidStructure,
    NoBoundednessWitness,
    NotAComplex,
    OrbfloerError,
    ParseError,
    UnknownGenerator,
    UnknownToken,
)
from .gf2 import BACKEND, Gf2Matrix, rank_gf2
from .homology import edge_reduce, homology_rank, verify_d_squared
from .io import parse, serialize
from .orbifold import (
    IndexedGenerator,
    OrbifoldOrders,
    bracket,
    d_n,
    hfo,
    hfo_complex,
    lemma42_witness,
    orb_extend,
    orb_extend_box_da,
    shift_count,
    shift_morphism,
)
from .structures import (
    DAGenerator,
    Generator,
    MorphismA,
    TypeAStructure,
    TypeDAStructure,
    TypeDStructure,
    check_type_a,
    check_type_d,
    delta_k,
    is_bounded_d,
    is_nice_a,
)
from .tensor import ChainComplex, box_a_d, box_a_da, box_da_d

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "BACKEND",
    "BasisElement",
    "ChainComplex",
    "DAGenerator",
    "DuplicateGenerator",
    "GenerationFailed",
    "Generator",
    "Gf2Matrix",
    "IncompatibleIdempotents",
    "IndexedGenerator",
    "InvalidOrder",
    "InvalidStructure",
    "MorphismA",
    "NoBoundednessWitness",
    "NotAComplex",
    "OrbfloerError",
    "OrbifoldOrders",
    "ParseError",
    "TypeAStructure",
    "TypeDAStructure",
    "TypeDStructure",
    "UnknownGenerator",
    "UnknownToken",
    "add",
    "basis_mul",
    "box_a_d",
    "box_a_da",
    "box_da_d",
    "bracket",
    "check_type_a",
    "check_type_d",
    "d_n",
    "delta_k",
    "edge_reduce",
    "hfo",
    "hfo_complex",
    "homology_rank",
    "identity_da",
    "is_bounded_d",
    "is_nice_a",
    "lemma42_witness",
    "lens_space_cfa",
    "mul",
    "orb_extend",
    "orb_extend_box_da",
    "parse",
    "random_type_a",
    "rank_gf2",
    "serialize",
    "shift_count",
    "shift_morphism",
    "shift_weight",
    "solid_torus_cfd",
    "source_idem",
    "target_idem",
    "verify_d_squared",
]
