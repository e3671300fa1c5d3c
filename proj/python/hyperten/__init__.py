"""Spectral analysis of general hypergraphs."""

from ._core import (
    BudgetError,
    Hypergraph,
    ParseError,
    PerronResult,
    adjacency_form,
    average_degree,
    bounds,
    collatz_wielandt,
    connected_components,
    degrees,
    find_odd_bipartition,
    is_connected,
    is_regular,
    is_uniform,
    is_weakly_irreducible,
    laplacian_allones_residual,
    parse,
    rank_corank,
    rayleigh,
    report_json,
    serialize,
    signed_perron_residual,
    signless_kernel_residual,
    similarity_certificate,
    spectral_radius,
    tensor_apply,
    tensor_nonzeros,
)

__all__ = [
    "BudgetError",
    "Hypergraph",
    "ParseError",
    "PerronResult",
    "adjacency_form",
    "average_degree",
    "bounds",
    "collatz_wielandt",
    "connected_components",
    "degrees",
    "find_odd_bipartition",
    "is_connected",
    "is_regular",
    "is_uniform",
    "is_weakly_irreducible",
    "laplacian_allones_residual",
    "parse",
    "rank_corank",
    "rayleigh",
    "report_json",
    "serialize",
    "signed_perron_residual",
    "signless_kernel_residual",
    "similarity_certificate",
    "spectral_radius",
    "tensor_apply",
    "tensor_nonzeros",
]
