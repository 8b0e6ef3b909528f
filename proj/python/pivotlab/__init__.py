"""Pivot orbits of graphs and hypergraphs, flat spectra and binary linear codes."""

from ._core import (
    BooleanFunction,
    BudgetError,
    DimensionError,
    Graph,
    InadmissibleEdgeError,
    LinearCode,
    NotAnEdgeError,
    ParseError,
    RangeError,
    classify,
    classify_codes,
    count_flat,
    count_flat_quadratic,
    equivalent,
    flat_h_sets,
    is_admissible_edge,
    is_flat,
    local_complement,
    orbit,
    pivot,
    pivot_anf,
    table,
)

__all__ = [
    "BooleanFunction",
    "BudgetError",
    "DimensionError",
    "Graph",
    "InadmissibleEdgeError",
    "LinearCode",
    "NotAnEdgeError",
    "ParseError",
    "RangeError",
    "classify",
    "classify_codes",
    "count_flat",
    "count_flat_quadratic",
    "equivalent",
    "flat_h_sets",
    "is_admissible_edge",
    "is_flat",
    "local_complement",
    "orbit",
    "pivot",
    "pivot_anf",
    "table",
]
