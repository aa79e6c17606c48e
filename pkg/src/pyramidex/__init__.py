"""Extremal-graph experiments for the triangular pyramids TP_k."""
from .canon import canonical_code, canonical_graph, is_canonical
from .graph import INFINITE, Graph, girth, graph_from_edges, induced_subgraph
from .formats import decode_graph6, encode_graph6
from .subiso import Embedding, find_embedding, is_free, verify_embedding
from .turan import TuranRecord, exact_ex, h, verify_record

__all__ = [
    "INFINITE", "Embedding", "Graph", "TuranRecord", "canonical_code", "canonical_graph",
    "decode_graph6", "encode_graph6", "exact_ex", "find_embedding", "girth",
    "graph_from_edges", "h", "induced_subgraph", "is_canonical", "is_free",
    "verify_embedding", "verify_record",
]
__version__ = "0.1.0"
