"""Exact Iwasawa invariants of Z_ell-towers of multigraphs."""

from ._core import (
    IwagraphError,
    Multigraph,
    arb_large_voltage,
    bouquet_distribution,
    bouquet_invariants,
    char_series_prefix,
    closed_form_bouquet,
    complete_density,
    complete_graph,
    count_quadratic_zeros,
    derive,
    invariants,
    kappa_sequence,
    mu_positive_upper_bound,
    two_vertex_probability,
    vary_t_density,
)

__all__ = [
    "IwagraphError",
    "Multigraph",
    "arb_large_voltage",
    "bouquet_distribution",
    "bouquet_invariants",
    "char_series_prefix",
    "closed_form_bouquet",
    "complete_density",
    "complete_graph",
    "count_quadratic_zeros",
    "derive",
    "invariants",
    "kappa_sequence",
    "mu_positive_upper_bound",
    "two_vertex_probability",
    "vary_t_density",
]
