"""Graph representation, formats, structural predicates and generators."""
from .graph import (Graph, GraphFormatError, disjoint_union, load_adjlist, load_graph6,
                    load_graph_text, save_adjlist, save_graph6, to_dot)
from .generators import (EnumerationRefused, canonical_form, complete_bipartite, complete_graph,
                         cycle_graph, empty_graph, enumerate_graphs, graph_from_mask, grid_graph,
                         house_graph, path_graph, petersen_graph, random_grid_subgraph, wheel_graph)
from .holes import SearchGuardError, find_odd_hole, hole_capable_edges, is_induced_cycle, odd_hole_certificate
from .patterns import Pattern, contains_induced, find_induced
from .planarity import RotationSystem, count_faces, euler_check, is_planar, nonplanar_witness
from .properties import find_triangle, girth, is_bipartite, is_triangle_free, max_degree

__all__ = [name for name in dir() if not name.startswith("_")]
