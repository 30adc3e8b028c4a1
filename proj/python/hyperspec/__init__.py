"""Exact characteristic and E-characteristic polynomials of uniform hypergraphs."""

from fractions import Fraction

from ._hyperspec import (
    Hypergraph,
    HyperspecError,
    are_cospectral,
    char_poly,
    complement,
    complete_hypergraph,
    count_simplices,
    ds_verify,
    e_char_poly,
    example_pair,
    is_isomorphic,
    lemma4_scan,
    simplex_destruction_min,
    verify_switch,
)


def as_fractions(coefficients):
    """Coefficient strings to Fractions."""
    return [Fraction(c) for c in coefficients]


__all__ = [
    "Hypergraph",
    "HyperspecError",
    "are_cospectral",
    "as_fractions",
    "char_poly",
    "complement",
    "complete_hypergraph",
    "count_simplices",
    "ds_verify",
    "e_char_poly",
    "example_pair",
    "is_isomorphic",
    "lemma4_scan",
    "simplex_destruction_min",
    "verify_switch",
]
