"""Level-wise reduction: peel off the last variable, solve identities in order.

Writing ``f_i = sum_a f_ia z_l^a`` and ``g_i = sum_b g_ib z_l^b`` turns
``sum_i f_i g_i == t`` into one identity per power ``p`` of ``z_l``::

    sum_{a+b=p} sum_i f_ia g_ib == t_p

After the prefix-sum transform (:func:`accumulate_rows`) identity ``r`` holds
every term with ``a + b <= r``, and the only unknowns not fixed by earlier
identities are ``g_ir`` (paired with ``f_i0``).  Each identity is therefore a
problem of the same shape in one variable fewer; the univariate bottom level
is a linear system solved with :func:`solve_sparse`.

Free parameters are fixed to zero at every level, so a failure on a later
identity may be an artefact of those choices.  Such failures are reported as
non-conclusive; only a failure reached through identity 0 at every level
rules out a certificate within the ansatz.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from nullcert.certificate import AnsatzSpec, Certificate, NoSolution, param_name
from nullcert.engine.linsys import Infeasible, build_identity_system, solve_sparse
from nullcert.engine.stats import make_ansatz
from nullcert.monomial import Monomial, natural_key
from nullcert.polynomial import Polynomial, PolySystem, Term, canonicalize, extract_coeffs, poly_mul, poly_sum

TermKey = tuple[int, int, int]  # (i, a, b): f_ia * g_ib


@dataclass(frozen=True)
class LevelIdentity:
    terms: tuple[tuple[TermKey, int], ...]  # sorted (term, multiplicity)
    rhs: Polynomial

    def term_dict(self) -> dict[TermKey, int]:
        return dict(self.terms)


LevelSystem = tuple[LevelIdentity, ...]


def _identity(terms: dict, rhs: Polynomial) -> LevelIdentity:
    return LevelIdentity(tuple(sorted((t, m) for t, m in terms.items() if m)), rhs)


def level_system(
    f_coeffs: Sequence[dict[int, Polynomial]],
    g_powers: Sequence[Sequence[int]],
    rhs_coeffs: dict[int, Polynomial],
    n: int,
) -> LevelSystem:
    """Identities ``p = 0..P`` of the decomposed problem (before accumulation)."""
    top = max(rhs_coeffs, default=0)
    for fc, gp in zip(f_coeffs, g_powers):
        if fc and gp:
            top = max(top, max(fc) + max(gp))
    out = []
    for p in range(top + 1):
        terms = {}
        for i, (fc, gp) in enumerate(zip(f_coeffs, g_powers)):
            for b in gp:
                if p - b in fc:
                    terms[(i, p - b, b)] = 1
        out.append(_identity(terms, rhs_coeffs.get(p, Polynomial.zero(n))))
    return tuple(out)


def accumulate_rows(system: LevelSystem) -> LevelSystem:
    """Replace identity ``r`` by the sum of identities ``1..r``."""
    out = []
    terms: dict = {}
    rhs: Optional[Polynomial] = None
    for ident in system:
        for t, m in ident.terms:
            terms[t] = terms.get(t, 0) + m
        rhs = ident.rhs if rhs is None else rhs + ident.rhs
        out.append(_identity(terms, rhs))
    return tuple(out)


def difference_rows(system: LevelSystem) -> LevelSystem:
    """Inverse of :func:`accumulate_rows`."""
    out = []
    prev: Optional[LevelIdentity] = None
    for ident in system:
        if prev is None:
            out.append(ident)
        else:
            terms = ident.term_dict()
            for t, m in prev.terms:
                terms[t] = terms.get(t, 0) - m
            out.append(_identity(terms, ident.rhs - prev.rhs))
        prev = ident
    return tuple(out)


class _Failure(Exception):
    def __init__(self, outcome: NoSolution):
        self.outcome = outcome


class _LevelSolver:
    def __init__(self, pivot_rule: str):
        self.pivot_rule = pivot_rule
        self.zeroed: list[str] = []

    def solve(
        self,
        ell: int,
        F: Sequence[Polynomial],
        bases: Sequence[Sequence[Monomial]],
        target: Polynomial,
        suffix: tuple[int, ...],
        chain: bool,
    ) -> list[Polynomial]:
        k = len(F)
        if ell == 1:
            lin = build_identity_system(1, F, bases, target)
            res = solve_sparse(lin, self.pivot_rule)
            if isinstance(res, Infeasible):
                raise _Failure(NoSolution(1, res.row, conclusive=chain))
            raw: list[list[Term]] = [[] for _ in range(k)]
            for (i, beta), v in zip(lin.cols, res.values):
                if v:
                    raw[i].append(Term(v, beta))
            for c in res.zeroed:
                i, beta = lin.cols[c]
                self.zeroed.append(param_name(i + 1, beta + suffix))
            return [canonicalize(1, terms) for terms in raw]

        lower = ell - 1
        zero = Polynomial.zero(lower)
        f_coeffs = [dict(extract_coeffs(f, ell)) for f in F]
        t_coeffs = dict(extract_coeffs(target, ell))
        sub_bases: list[dict[int, list[Monomial]]] = []
        for basis in bases:
            groups: dict[int, list[Monomial]] = {}
            for beta in basis:
                groups.setdefault(beta[-1], []).append(beta[:-1])
            sub_bases.append({b: sorted(ms, key=natural_key) for b, ms in groups.items()})

        acc = accumulate_rows(level_system(f_coeffs, [sorted(g) for g in sub_bases], t_coeffs, lower))
        G: list[dict[int, Polynomial]] = [{} for _ in range(k)]
        top_b = max((max(g) for g in sub_bases if g), default=-1)
        for r, ident in enumerate(acc):
            known = []
            for (i, a, b), mult in ident.terms:
                if b < r:
                    known.append(poly_mul(f_coeffs[i][a], G[i][b]).scale(mult))
            sub_target = ident.rhs - poly_sum(known, lower)
            if r <= top_b:
                sub_F = [fc.get(0, zero) for fc in f_coeffs]
                sb = [g.get(r, []) for g in sub_bases]
                sol = self.solve(lower, sub_F, sb, sub_target, (r,) + suffix, chain and r == 0)
                for i in range(k):
                    if sb[i]:
                        G[i][r] = sol[i]
            elif sub_target:
                raise _Failure(NoSolution(ell, r + 1, conclusive=chain and r == 0))
        out = []
        for i in range(k):
            raw = [Term(c, m + (b,)) for b, p in G[i].items() for c, m in p.terms]
            out.append(canonicalize(ell, raw))
        return out


def solve_levelwise(
    sys: PolySystem,
    ansatz: AnsatzSpec | None = None,
    pivot_rule: str = "paper-tuple",
) -> Certificate | NoSolution:
    """Level-wise search for a certificate within ``ansatz`` (paper-rank by default).

    A returned certificate has been verified.  A non-conclusive NoSolution
    means the zero-fixing of free parameters led to a dead end; callers should
    escalate to the flat solve over the same ansatz.
    """
    from nullcert.oracle import verify

    if ansatz is None:
        ansatz = make_ansatz(sys, "paper-rank")
    n = sys.n
    one = (0,) * n
    if sys.k == 1 and len(sys.polys[0]) == 1 and sys.polys[0].terms[0].mono == one \
            and one in ansatz.bases[0]:
        g = Polynomial.constant(n, 1 / sys.polys[0].terms[0].coeff)
        return Certificate((g,), ansatz, "levelwise")

    solver = _LevelSolver(pivot_rule)
    try:
        g = solver.solve(n, sys.polys, ansatz.bases, Polynomial.constant(n, 1), (), True)
    except _Failure as fail:
        o = fail.outcome
        if o.conclusive:
            msg = f"no certificate exists within the {ansatz.kind} ansatz"
        else:
            msg = "level-wise dead end after fixing free parameters to zero; not conclusive"
        return NoSolution(o.level, o.equation, msg, o.conclusive, ansatz, "levelwise")
    cert = Certificate(tuple(g), ansatz, "levelwise", tuple(solver.zeroed))
    if verify(sys, cert).poly:
        return NoSolution(0, 0, "level-wise candidate failed verification", False, ansatz, "levelwise")
    return cert
