"""Certificate search: system statistics, ansatz construction, the sparse
coefficient-matching system and the two solving strategies."""

from nullcert.engine.levelwise import accumulate_rows, difference_rows, level_system, solve_levelwise
from nullcert.engine.linsys import (
    Infeasible,
    SparseLinearSystem,
    SparseSolution,
    build_identity_system,
    build_linear_system,
    extract_certificate,
    solve_sparse,
)
from nullcert.engine.solve import solve, solve_macaulay
from nullcert.engine.stats import SystemStats, make_ansatz, paper_rank_basis, system_stats

__all__ = [
    "Infeasible",
    "SparseLinearSystem",
    "SparseSolution",
    "SystemStats",
    "accumulate_rows",
    "build_identity_system",
    "build_linear_system",
    "difference_rows",
    "extract_certificate",
    "level_system",
    "make_ansatz",
    "paper_rank_basis",
    "solve",
    "solve_levelwise",
    "solve_macaulay",
    "solve_sparse",
    "system_stats",
]
