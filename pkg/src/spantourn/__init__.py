"""Isomorphism and automorphism groups of k-spanning colored tournaments."""

from .driver import (DriverStats, aut_spanning, build_gadget,
                     find_spanning_classes, iso_spanning, triple_cycle_coset)
from .extend import (AuxOutput, BipartiteBlock, IsoFamily, extend_action,
                     iso_family, local_tournament, pair_hypergraph,
                     wreath_group)
from .gen import cayley_tournament, is_spanning_connection, random_k_spanning
from .ctf import CtfError, emit_ctf, parse_ctf
from .perm import (BlockAction, Coset, Perm, PermGroup, bsgs, direct_product,
                   induced_action, is_solvable, restrict, trivial_group)
from .search import (aut_colored, aut_digraph_cap, aut_hypergraph_cap,
                     brute_aut, brute_iso, iso_rep, subgroup_search,
                     tournament_iso, STATS)
from .structures import (ColoredDigraph, Hypergraph, InducedSubdigraph,
                         finer_or_equal_partitions, induced, is_k_spanning,
                         is_strongly_connected, maximal_valency,
                         minimal_spanning_k, relation_max_valency, small_union)
from .wl2 import PairColoring, initial_coloring, iterate_round, refine_to_stable, wl2

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
