"""Idempotents of finite rings, their digraph, and inner automorphisms between them."""
from .field import FiniteField, make_field
from .graph import IdempotentDigraph, build_graph, to_dot, to_json
from .idempotents import (
    CompanionPair,
    IdempotentClass,
    Kind,
    SquareZeroElement,
    commutes_with_all_idempotents,
    companion_idempotents,
    enumerate_idempotents,
    in_class,
    is_central,
    noncentrality_witness,
    out_class,
    partition_in,
    partition_out,
)
from .inner import Direction, InnerAutomorphism, connect_pair, from_square_zero, induced_graph_map, stabilizer_family
from .rings import (
    Ring,
    StructureConstantAlgebra,
    build_field_algebra,
    build_group_algebra,
    build_matrix_algebra,
    build_product,
    build_structure_constants,
    build_upper_triangular,
    build_zn,
    build_zn_matrix,
    verify_ring_axioms,
)
from .ringspec import build_ring
from .theorems import run_all, span_basis

__version__ = "0.1.0"
