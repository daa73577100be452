"""Decomposability and diameter tools for pure simplicial complexes.

Submodules
----------
complex
    Facet-list representation of simplicial complexes (links, deletions,
    purity, ridge graph, diameter) and the ``.cplx`` text format.
decomp
    Exhaustive (weak) k-decomposability search with replayable certificates
    and the associated diameter bounds.
transport
    Classical transportation polytopes from integer margins, their vertices
    and polar simplicial complexes.
family
    Closed-form generators for the non-weakly-vertex-decomposable polars of
    2 x n transportation polytopes.
"""
from polydecomp.complex import (
    ComplexError,
    DiameterReport,
    FacetGraph,
    SimplicialComplex,
    canonical_key,
    deletion,
    diameter,
    faces_of_dim,
    from_facets,
    is_pure,
    is_simplex,
    link,
    read_cplx,
    ridge_graph,
    to_cplx,
    write_cplx,
)
from polydecomp.decomp import (
    BoundReport,
    Certificate,
    Decision,
    Leaf,
    Node,
    SearchLimitExceeded,
    check_billera_provan,
    check_hirsch,
    decide,
    is_k_decomposable,
    is_weakly_k_decomposable,
    verify_certificate,
)
from polydecomp.transport import (
    Margins,
    TransportationPolytope,
    VertexMatrix,
    enumerate_vertices,
    is_nondegenerate,
    make_polytope,
    polar_complex,
)
from polydecomp.family import delta_even, delta_odd, proof_witnesses

__version__ = "0.1.0"
