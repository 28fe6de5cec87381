"""Iterated Local Directed Transitivity (ILDT) graphs.

Generation by cloning, exact arc and triad counts, eigenvalue evolution and
Hamiltonian cycle construction.
"""

from .census import (
    DensificationReport,
    TriadCounts,
    closed_form_basic,
    densification,
    triad_census_bruteforce,
    triad_closed_form,
    triad_ratio_limit,
    triad_recurrence_step,
)
from .digraph import ArcKind, BasicCounts, Digraph, count_basic, find_oriented_cycle, make_digraph, verify_ham_cycle
from .errors import ILDTError
from .generator import Generation, Lineage, block_of, clones_at, embed_undirected, ildt_iterate, ildt_step
from .graphio import builtin_seed, load_graph, save_graph
from .hamilton import (
    HamCycle,
    NiceWalk,
    build_ham_cycle,
    clone_block_path,
    cycle_preservation_check,
    dfs_nice_walk,
    is_nice,
    max_frequency,
    min_time_for,
)
from .spectral import (
    Spectrum,
    compose_adjacency,
    curve_sample,
    initial_spectrum,
    normalize_spectrum,
    spectrum_iterate,
    step_map,
)

__version__ = "0.1.0"
