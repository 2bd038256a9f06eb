"""Finite topological spaces, simplicial complexes and simple homotopy certificates."""

from ._finspace import (
    ContinuousMap,
    FiniteSpace,
    FinspaceError,
    ParseError,
    SimplicialComplex,
    bridge,
    collapse,
    collapse_complex,
    cone,
    core,
    dot,
    euler_characteristic,
    example,
    example_names,
    face_poset,
    free_pairs,
    homology,
    homotopy_equivalent,
    is_contractible,
    is_distinguished,
    mapping_cylinder,
    order_complex,
    subdivide,
    verify,
    weak_points,
)

__all__ = [name for name in dir() if not name.startswith("_")]
