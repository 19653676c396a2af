"""Exact computation of traces, characters and filtration jumps for the
special fibers of degenerating curves.

From the combinatorial data of a fiber (the component multigraph with
genus and multiplicity per vertex) the package computes, in exact integer
and rational arithmetic: resolution data of the cyclic quotient
singularities sitting over the intersection points, trace polynomials of
the cyclic action on fiber cohomology, the irreducible character multiset
on H^1, and the jumps of the rational-index filtration of the associated
group scheme.
"""

from .arith import JHExpansion, gcd_lcm, jh_expand, mod_inverse
from .catalog import FiberTypeId, catalog_ids, lookup
from .exactalg import CyclotomicNumber, GroupRingElement, cyclotomic_polynomial
from .fiber import (
    CharacterMultiset,
    FiberGraph,
    Vertex,
    h1_character,
    parse_graph,
    self_intersections,
    total_trace,
)
from .jumps import JumpOptions, JumpSet, candidate_jumps, compute_jumps, principal_lcm
from .resolution import (
    NodeEigenData,
    ResolutionData,
    Singularity,
    is_stable,
    node_eigen_data,
    resolve,
    stabilized_profile,
    universal_polys,
)
from .singtrace import (
    closed_form_coefficients,
    trace_closed_form,
    trace_oracle,
    trace_polynomial,
    vertex_trace,
)

__all__ = [
    "CharacterMultiset",
    "CyclotomicNumber",
    "FiberGraph",
    "FiberTypeId",
    "GroupRingElement",
    "JHExpansion",
    "JumpOptions",
    "JumpSet",
    "NodeEigenData",
    "ResolutionData",
    "Singularity",
    "Vertex",
    "candidate_jumps",
    "catalog_ids",
    "closed_form_coefficients",
    "compute_jumps",
    "cyclotomic_polynomial",
    "gcd_lcm",
    "h1_character",
    "is_stable",
    "jh_expand",
    "lookup",
    "mod_inverse",
    "node_eigen_data",
    "parse_graph",
    "principal_lcm",
    "resolve",
    "self_intersections",
    "stabilized_profile",
    "total_trace",
    "trace_closed_form",
    "trace_oracle",
    "trace_polynomial",
    "universal_polys",
    "vertex_trace",
]
