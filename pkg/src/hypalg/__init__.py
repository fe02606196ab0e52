"""Exact-arithmetic hypergraph bialgebras and chromatic polynomial quartets.

A hypergraph is an arbitrary boolean relation between edges and vertices.
Dualizing and complementing the relation give a quartet of hypergraphs;
this package implements the restriction, extraction-contraction, and
descent coproduct families on isomorphism classes, the counting morphisms
into exact polynomials (chromatic and rainbow quartets), and executable
suites verifying the algebraic laws on small instances.
"""

from .canon import canonical_form, canonical_key, from_key, relabel
from .chromatic import (
    Polynomial,
    chromatic_incl_excl,
    chromatic_poly,
    count_colorings,
    count_rainbow,
    drop_empty_edges,
    interpolate,
    quartet,
    rainbow_poly,
    rainbow_quartet,
    vanishing_criteria,
)
from .coalgebra import (
    ALL_KINDS,
    CoproductKind,
    coproduct,
    counit,
    counit_for,
    in_subspace,
    product_on_keys,
)
from .errors import HypergraphError, PreconditionError, ResourceLimitError
from .hgx import ParseError, parse_hgx, serialize_hgx
from .hypergraph import (
    EMPTY,
    Hypergraph,
    complement,
    complement_union,
    contract,
    co_restrict_edges,
    core,
    derive,
    disjoint_union,
    dual,
    edge_mask,
    from_edge_sets,
    link,
    restrict_to,
    select_edges,
    set_partitions,
    single_full_edge,
    special_subsets,
    trace_to,
    two_section,
    vertex_components,
    vertices_only,
)
from .laws import (
    LawReport,
    SuiteConfig,
    enumerate_hypergraphs,
    random_hypergraph,
    run_suite,
)
from .lincomb import LinComb, apply_slot, extend_linear, lc_add, lc_scale, lc_tensor, mult_slots_13

__version__ = "0.1.0"
