"""Coefficient-matching linear systems and their exact sparse solver.

Unknown ``(i, beta)`` is the coefficient of ``z^beta`` in ``g_i``.  Row ``mu``
states that the coefficient of ``z^mu`` in ``sum_i f_i g_i`` equals the
coefficient of ``z^mu`` in the target (``1`` for a certificate).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from nullcert import counting
from nullcert.certificate import AnsatzSpec, Certificate, param_name
from nullcert.monomial import Monomial, mono_rank, natural_key
from nullcert.polynomial import Polynomial, PolySystem, Term, canonicalize
from nullcert.scalar import ONE, ZERO, GaussianRational

PIVOT_RULES = ("paper-tuple", "markowitz")


@dataclass(frozen=True)
class SparseLinearSystem:
    n: int
    row_monos: tuple[Monomial, ...]
    cols: tuple[tuple[int, Monomial], ...]  # (i, beta), i 0-based
    rows: tuple[dict, ...]  # column index -> non-zero GaussianRational
    rhs: tuple[GaussianRational, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def col_names(self) -> list[str]:
        return [param_name(i + 1, beta) for i, beta in self.cols]

    def residual(self, values: Sequence[GaussianRational]) -> list[GaussianRational]:
        out = []
        for row, b in zip(self.rows, self.rhs):
            s = ZERO
            for c, v in row.items():
                s = s + v * values[c]
            out.append(s - b)
        return out


def build_identity_system(
    n: int,
    polys: Sequence[Polynomial],
    bases: Sequence[Sequence[Monomial]],
    target: Polynomial,
) -> SparseLinearSystem:
    """Linear system for ``sum_i polys[i] * g_i == target`` with ``g_i``
    supported on ``bases[i]``.

    Rows are every ``alpha + beta`` plus the support of the target plus the
    constant monomial, sorted in natural order (the constant row comes first).
    """
    if len(polys) != len(bases):
        raise ValueError(f"{len(polys)} polynomials but {len(bases)} bases")
    cols = [(i, beta) for i, basis in enumerate(bases) for beta in basis]
    entries: dict[Monomial, dict] = {(0,) * n: {}}
    for c_idx, (i, beta) in enumerate(cols):
        for coeff, alpha in polys[i].terms:
            mu = tuple(a + b for a, b in zip(alpha, beta))
            row = entries.get(mu)
            if row is None:
                row = entries[mu] = {}
            # alpha is unique per (mu, beta), so no accumulation is needed
            row[c_idx] = coeff
            counting.assign()
    for t in target.terms:
        entries.setdefault(t.mono, {})
    order = sorted(entries, key=natural_key)
    rhs = tuple(target.coeff(mu) for mu in order) if target.terms else (ZERO,) * len(order)
    return SparseLinearSystem(
        n=n,
        row_monos=tuple(order),
        cols=tuple(cols),
        rows=tuple(entries[mu] for mu in order),
        rhs=rhs,
    )


def build_linear_system(sys: PolySystem, ansatz: AnsatzSpec) -> SparseLinearSystem:
    if len(ansatz.bases) != sys.k:
        raise ValueError(f"ansatz has {len(ansatz.bases)} bases for {sys.k} polynomials")
    return build_identity_system(sys.n, sys.polys, ansatz.bases, Polynomial.constant(sys.n, 1))


@dataclass(frozen=True)
class SparseSolution:
    values: tuple[GaussianRational, ...]
    zeroed: tuple[int, ...]  # indices of free columns set to 0
    pivots: tuple[int, ...]  # pivot columns in the order they were chosen


@dataclass(frozen=True)
class Infeasible:
    row: int  # 1-based index of the first inconsistent equation


def _tuple_key(lin: SparseLinearSystem, r: int, c: int, rank_cache: dict):
    """(rank of alpha, i) with alpha = mu_r - beta_c, or None when mu_r - beta_c
    is not a monomial (fill-in entry)."""
    i, beta = lin.cols[c]
    alpha = tuple(x - y for x, y in zip(lin.row_monos[r], beta))
    if min(alpha, default=0) < 0:
        return None
    rk = rank_cache.get(alpha)
    if rk is None:
        rk = rank_cache[alpha] = mono_rank(alpha)
    return (rk, i)


def solve_sparse(
    lin: SparseLinearSystem, pivot_rule: str = "paper-tuple"
) -> Union[SparseSolution, Infeasible]:
    """Exact elimination; free unknowns are set to zero.

    Equations are processed in row order.  Under ``paper-tuple`` each
    equation's pivot is the unknown whose coefficient ``a_{i,alpha}`` has the
    lowest ``(rank(alpha), i)`` among the coefficients not yet used as pivots;
    if every such coefficient is used up, the lowest remaining key (fill-in
    last) is taken.  ``markowitz`` picks the unknown occurring in the fewest
    original equations.
    """
    if pivot_rule not in PIVOT_RULES:
        raise ValueError(f"unknown pivot rule {pivot_rule!r}")
    ncols = len(lin.cols)
    pivot_col: list[int] = []
    pivot_rows: list[dict] = []
    pivot_rhs: list[GaussianRational] = []
    pivot_index: dict[int, int] = {}
    used_coeffs: set = set()
    rank_cache: dict = {}
    col_count = None
    if pivot_rule == "markowitz":
        col_count = [0] * ncols
        for row in lin.rows:
            for c in row:
                col_count[c] += 1

    for r, (orig, b) in enumerate(zip(lin.rows, lin.rhs)):
        row = dict(orig)
        counting.assign(len(row) + 1)
        heap = [pivot_index[c] for c in row if c in pivot_index]
        heapq.heapify(heap)
        while heap:
            t = heapq.heappop(heap)
            col = pivot_col[t]
            factor = row.pop(col, None)
            if factor is None:
                continue
            for c2, v in pivot_rows[t].items():
                old = row.get(c2)
                new = -(factor * v) if old is None else old - factor * v
                counting.assign()
                if new:
                    row[c2] = new
                    if old is None and c2 in pivot_index:
                        heapq.heappush(heap, pivot_index[c2])
                else:
                    row.pop(c2, None)
            b = b - factor * pivot_rhs[t]
        counting.compare(len(row) + 1)
        if not row:
            if b:
                return Infeasible(r + 1)
            continue

        if pivot_rule == "paper-tuple":
            best_key = fallback_key = None
            for c in row:
                key = _tuple_key(lin, r, c, rank_cache)
                counting.compare()
                if key is None:
                    fk = (1, 0, 0, c)
                else:
                    fk = (0, key[0], key[1], c)
                    if (key[1], key[0]) not in used_coeffs and (best_key is None or fk < best_key):
                        best_key = fk
                if fallback_key is None or fk < fallback_key:
                    fallback_key = fk
            chosen = (best_key or fallback_key)[3]
            key = _tuple_key(lin, r, chosen, rank_cache)
            if key is not None:
                used_coeffs.add((key[1], key[0]))
        else:
            chosen = min(row, key=lambda c: (col_count[c], c))
            counting.compare(len(row))

        piv = row.pop(chosen)
        inv = ONE / piv
        normalized = {c: v * inv for c, v in row.items()}
        counting.assign(len(normalized) + 1)
        pivot_index[chosen] = len(pivot_col)
        pivot_col.append(chosen)
        pivot_rows.append(normalized)
        pivot_rhs.append(b * inv)

    values: list[Optional[GaussianRational]] = [None] * ncols
    zeroed = []
    for c in range(ncols):
        if c not in pivot_index:
            values[c] = ZERO
            zeroed.append(c)
    counting.assign(len(zeroed))
    for t in range(len(pivot_col) - 1, -1, -1):
        v = pivot_rhs[t]
        for c2, a in pivot_rows[t].items():
            v = v - a * values[c2]
        values[pivot_col[t]] = v
        counting.assign()

    for r, res in enumerate(lin.residual(values)):
        if res:
            raise AssertionError(f"elimination produced a wrong solution (row {r + 1})")
    return SparseSolution(tuple(values), tuple(zeroed), tuple(pivot_col))


def extract_certificate(
    solution: SparseSolution,
    ansatz: AnsatzSpec,
    sys: PolySystem,
    strategy: str = "macaulay",
    lin: SparseLinearSystem | None = None,
) -> Certificate:
    """Reassemble the g_i from the solution vector (columns in ansatz order)."""
    cols = lin.cols if lin is not None else [(i, b) for i, basis in enumerate(ansatz.bases) for b in basis]
    if len(cols) != len(solution.values):
        raise ValueError("solution length does not match the ansatz")
    raw: list[list[Term]] = [[] for _ in range(sys.k)]
    for (i, beta), v in zip(cols, solution.values):
        if v:
            raw[i].append(Term(v, beta))
    g = tuple(canonicalize(sys.n, terms) for terms in raw)
    zeroed = tuple(param_name(cols[c][0] + 1, cols[c][1]) for c in solution.zeroed)
    return Certificate(g=g, ansatz=ansatz, strategy=strategy, zeroed_params=zeroed)
