"""Planarity testing, combinatorial embeddings and Kuratowski minors.

Planar graphs are embedded through conflict graphs of fundamental cycles;
non-planar graphs yield a verified K5 or K3,3 minor.
"""

from .conflict import Bridge, ConflictGraph, bridges_of_cycle, conflict_graph, conflicts, two_color
from .decompose import blocks, compose_blocks, compose_triconnected, triconnected_components
from .embed3 import NonPlanarEvidence, embed, embed_triconnected, is_planar
from .embedding import PlanarEmbedding, trace_faces
from .graph import Cycle, Graph, GraphError, build_graph, canonical_graph, fundamental_cycle, spanning_tree
from .io import format_edge_list, parse_graph
from .kuratowski import KuratowskiMinor, find_kuratowski
from .minor import MinorModel
from .oracle import gen_gnm, gen_triangulation, tutte_planarity, verify_embedding, verify_minor

__all__ = [
    "Bridge", "ConflictGraph", "Cycle", "Graph", "GraphError", "KuratowskiMinor", "MinorModel",
    "NonPlanarEvidence", "PlanarEmbedding", "blocks", "bridges_of_cycle", "build_graph", "canonical_graph",
    "compose_blocks", "compose_triconnected", "conflict_graph", "conflicts", "embed", "embed_triconnected",
    "find_kuratowski", "format_edge_list", "fundamental_cycle", "gen_gnm", "gen_triangulation", "is_planar",
    "parse_graph", "spanning_tree", "trace_faces", "triconnected_components", "tutte_planarity", "two_color",
    "verify_embedding", "verify_minor",
]

__version__ = "0.1.0"
