"""Exact computation of D(X, N), the largest subset of {1..N} with no two
distinct elements differing by a member of X, plus closed forms and local
(modular) densities."""

from .cascade import CascadeRecord, cascade, compress_table, load_log
from .clique import Budget, BudgetExhausted, CliqueOutcome, brute_force_max_clique, max_clique
from .exact import compute_d
from .formulas import (
    find_m_star,
    greedy_construct,
    primes_formula,
    squares_plus_one_formula,
    squares_plus_two_lower_bound,
)
from .graph import DiffGraph, circulant_graph, zero_neighborhood_graph
from .modular import DensityRecord, local_density, locally_intersective_up_to, mu_lower_scan
from .sets import ForbiddenSet, contains, elements_in_range, is_x_set, parse_set_spec, residues_mod
from .verify import verify_formula

__all__ = [
    "Budget", "BudgetExhausted", "CascadeRecord", "CliqueOutcome", "DensityRecord", "DiffGraph",
    "ForbiddenSet", "brute_force_max_clique", "cascade", "circulant_graph", "compress_table",
    "compute_d", "contains", "elements_in_range", "find_m_star", "greedy_construct", "is_x_set",
    "load_log", "local_density", "locally_intersective_up_to", "max_clique", "mu_lower_scan",
    "parse_set_spec", "primes_formula", "residues_mod", "squares_plus_one_formula",
    "squares_plus_two_lower_bound", "verify_formula", "zero_neighborhood_graph",
]
