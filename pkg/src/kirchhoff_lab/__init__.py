"""Kirchhoff indices, resistance distances, and exact determinant recurrences
for weighted multigraphs treated as resistor networks."""

from .multigraph import (
    Edge,
    Multigraph,
    build_multigraph,
    incidence,
    is_connected,
    merge_parallel,
    parse_edge_list,
    format_edge_list,
    read_edge_list,
    write_edge_list,
)
from .resistance import (
    KirchhoffReport,
    kirchhoff_eigen,
    kirchhoff_pairs,
    kirchhoff_poly,
    kirchhoff_report,
    kirchhoff_tree,
    resistance_det,
    resistance_pinv,
)
from .spectral import (
    charpoly_exact,
    determinant_exact,
    determinant_float,
    eigenvalues,
    laplacian,
    pseudoinverse_laplacian,
)

__version__ = "0.1.0"
