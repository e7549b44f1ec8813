"""Strategy dispatch.  Every certificate leaving :func:`solve` is re-verified."""

from __future__ import annotations

from nullcert.certificate import AnsatzSpec, Certificate, NoSolution, SolveOutcome
from nullcert.engine.levelwise import solve_levelwise
from nullcert.engine.linsys import Infeasible, build_linear_system, extract_certificate, solve_sparse
from nullcert.engine.stats import make_ansatz
from nullcert.polynomial import PolySystem

STRATEGIES = ("macaulay", "levelwise", "auto")


def solve_macaulay(sys: PolySystem, ansatz: AnsatzSpec, pivot_rule: str = "paper-tuple") -> SolveOutcome:
    """Flat solve of the whole coefficient-matching system.  Its NoSolution is
    always conclusive for the ansatz; equations are numbered in row order."""
    lin = build_linear_system(sys, ansatz)
    res = solve_sparse(lin, pivot_rule)
    if isinstance(res, Infeasible):
        return NoSolution(
            sys.n, res.row, f"no certificate exists within the {ansatz.kind} ansatz",
            True, ansatz, "macaulay",
        )
    return extract_certificate(res, ansatz, sys, "macaulay", lin)


def solve(
    sys: PolySystem,
    strategy: str = "auto",
    ansatz: str | AnsatzSpec = "paper-rank",
    pivot_rule: str = "paper-tuple",
    degree: int | None = None,
    caps=None,
) -> SolveOutcome:
    """Search for ``g`` with ``sum f_i g_i == 1`` within an ansatz.

    ``auto`` runs the level-wise strategy and falls back to the flat Macaulay
    solve when the level-wise result is not conclusive.  A NoSolution only
    means that no certificate exists within the ansatz tried.
    """
    from nullcert.oracle import verify

    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    spec = ansatz if isinstance(ansatz, AnsatzSpec) else make_ansatz(sys, ansatz, degree=degree, caps=caps)

    if strategy == "macaulay":
        out = solve_macaulay(sys, spec, pivot_rule)
    else:
        out = solve_levelwise(sys, spec, pivot_rule)
        if strategy == "auto" and isinstance(out, NoSolution) and not out.conclusive:
            out = solve_macaulay(sys, spec, pivot_rule)

    if isinstance(out, Certificate) and verify(sys, out).poly:
        raise AssertionError(f"{out.strategy} produced a certificate that does not verify")
    return out
