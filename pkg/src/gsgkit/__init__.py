"""Spectral ratios of graphs and the search for golden spectral graphs."""

from .analysis import (PHI, classify_gsg, closed_form_spectrum, cycle_golden_size,
                       design_analysis, golden_identities, ramanujan_check,
                       verify_closed_form)
from .errors import (ContractError, DisconnectedGraphError, DomainError, GsgError,
                     InsufficientSpectrumError, NotAvailableError, ParameterError,
                     ParseError, SizeError)
from .graph import FamilySpec, Graph, build_family
from .io import emit_graph6, parse_adjacency, parse_edge_list, parse_graph6
from .report import analyze_graph
from .search import (enumerate_connected_graphs, enumerate_free_trees, scan_family,
                     scan_files, scan_trees)
from .spectra import (Spectrum, adjacency_spectrum, expansion_bounds,
                      laplacian_spectrum, spectral_ratios, sync_ratio)

__version__ = "0.1.0"

__all__ = [
    "PHI", "classify_gsg", "closed_form_spectrum", "cycle_golden_size",
    "design_analysis", "golden_identities", "ramanujan_check", "verify_closed_form",
    "ContractError", "DisconnectedGraphError", "DomainError", "GsgError",
    "InsufficientSpectrumError", "NotAvailableError", "ParameterError", "ParseError",
    "SizeError", "FamilySpec", "Graph", "build_family", "emit_graph6",
    "parse_adjacency", "parse_edge_list", "parse_graph6", "analyze_graph",
    "enumerate_connected_graphs", "enumerate_free_trees", "scan_family", "scan_files",
    "scan_trees", "Spectrum", "adjacency_spectrum", "expansion_bounds",
    "laplacian_spectrum", "spectral_ratios", "sync_ratio",
]
