"""Exact small-scale tools for Turán problems with suspension patterns."""
from .certificates import (check_k_good, check_suspension_lift, critical_edges, excess_subgraph,
                           find_k_good, is_edge_critical, r_partite_distance)
from .config import Budgets, RunConfig
from .constructions import (SuspensionSpec, ahs_gadget, chvatal_hanson, extremal_family,
                            extremal_member, fan, gadget_family, suspension, turan_edge_count,
                            turan_graph)
from .fnu_oracle import bounded_nu_delta_oracle
from .graph import Graph, from_graph6, parse_graph, to_graph6
from .invariants import chromatic_number, degree_stats, matching_number, max_degree
from .partition import RPartition
from .search import (enumerate_graphs, exact_turan, multipartite_free_scan, naive_class_count,
                     verify_theorem_grid)
from .subgraph import contains_subgraph

__version__ = "0.1.0"
