"""Goldbach factorization graphs and their autonomous components."""

from .components import (
    ComponentClass,
    census,
    census_text,
    classify_components,
    condensation_map,
    eac_vertex_sets,
    strongly_connected_components,
)
from .errors import CheckpointConfigError, DomainError, RangeError, ResourceLimitError
from .gfg import Gfg, build_gfg, goldbach_partitions, induced_subgraph
from .paths import (
    PathProblem,
    PathResult,
    hamiltonian_cycles,
    hamiltonian_paths,
    longest_path_gfg,
)
from .primes import SpfTable, build_spf_table, factorize, sieve_primes
from .report import EacReport, build_report
from .search import has_eac, resume_scan, scan_range
from .twin import TwinSolution, twin_check, twin_search, verify_twin_is_eac

__all__ = [
    "CheckpointConfigError",
    "ComponentClass",
    "DomainError",
    "EacReport",
    "Gfg",
    "PathProblem",
    "PathResult",
    "RangeError",
    "ResourceLimitError",
    "SpfTable",
    "TwinSolution",
    "build_gfg",
    "build_report",
    "build_spf_table",
    "census",
    "census_text",
    "classify_components",
    "condensation_map",
    "eac_vertex_sets",
    "factorize",
    "goldbach_partitions",
    "hamiltonian_cycles",
    "hamiltonian_paths",
    "has_eac",
    "induced_subgraph",
    "longest_path_gfg",
    "resume_scan",
    "scan_range",
    "sieve_primes",
    "strongly_connected_components",
    "twin_check",
    "twin_search",
    "verify_twin_is_eac",
]
