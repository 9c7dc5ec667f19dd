"""Multigraphs, good orientations and ordered Reeb graphs."""

from .core import (Multigraph, OrderedReebGraph, OrientationWitness, dumps, format_rational,
                   graph_from_json, multigraph_to_json_obj, ordered_from_witness)
from .enumerate import all_connected_multigraphs, canonical_form, enumerate_good_graphs
from .orientation import (betti, brute_force_good_orientation, find_good_orientation,
                          is_good_orientation, ordered_isomorphic)

__all__ = [
    "Multigraph", "OrderedReebGraph", "OrientationWitness", "dumps", "format_rational",
    "graph_from_json", "multigraph_to_json_obj", "ordered_from_witness",
    "all_connected_multigraphs", "canonical_form", "enumerate_good_graphs",
    "betti", "brute_force_good_orientation", "find_good_orientation",
    "is_good_orientation", "ordered_isomorphic",
]
