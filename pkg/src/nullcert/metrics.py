"""Basic-step instrumentation and the complexity-bound bracket.

The bracket evaluated by :func:`theorem_bound` is::

    m^2 * L + min(m1^3, d1^3) + sum_{l=1}^{n-2} N_l * min(m_{l+1}^2, d_{l+1}^2) + N_{n-1} * min(m, d_n)

with ``m`` the total monomial count, ``m_l``/``N_l`` the per-level counts
from :func:`system_stats`, and ``L = max(1, ceil(log2 m))``.  The constant in
front is taken as 1; the measured step count divided by the bracket is
reported, never assumed to be bounded.
"""

from __future__ import annotations

import csv
import io
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from nullcert.certificate import Certificate, SolveOutcome
from nullcert.counting import StepCounter, counting
from nullcert.engine.solve import solve
from nullcert.engine.stats import SystemStats, system_stats
from nullcert.polynomial import Polynomial, PolySystem, Term

CSV_HEADER = ["id", "n", "k", "m_sigma", "d", "outcome", "strategy",
              "assignments", "arith", "comparisons", "bracket", "ratio", "bits"]

EXHAUSTIVE_PRESORT_MAX_N = 8


@dataclass(frozen=True)
class BoundReport:
    stats: SystemStats
    bracket_value: int
    s_empirical: int

    @property
    def ratio(self) -> Fraction | None:
        if self.bracket_value == 0:
            return None
        return Fraction(self.s_empirical, self.bracket_value)


def log_term(m: int) -> int:
    """``max(1, ceil(log2 m))`` computed exactly."""
    if m <= 1:
        return 1
    return max(1, (m - 1).bit_length())


def theorem_bound(stats: SystemStats) -> int:
    n, m, d = stats.n, stats.m_sigma, stats.d
    value = m * m * log_term(m)
    if n == 1:
        return value + min(m ** 3, d[0] ** 3)
    ml, N = stats.m_sigma_level, stats.N_level
    value += min(ml[0] ** 3, d[0] ** 3)
    for ell in range(1, n - 1):
        value += N[ell - 1] * min(ml[ell] ** 2, d[ell] ** 2)
    value += N[n - 2] * min(m, d[n - 1])
    return value


def counted_solve(sys: PolySystem, strategy: str = "auto", ansatz="paper-rank",
                  pivot_rule: str = "paper-tuple", **kw) -> tuple[SolveOutcome, StepCounter]:
    with counting() as counter:
        out = solve(sys, strategy, ansatz, pivot_rule, **kw)
    return out, counter


def bound_report(sys: PolySystem, counter: StepCounter) -> BoundReport:
    stats = system_stats(sys)
    return BoundReport(stats, theorem_bound(stats), counter.total)


# --- variable presort ---------------------------------------------------------

def permute_system(sys: PolySystem, perm) -> PolySystem:
    """New variable ``j`` is old variable ``perm[j]`` (0-based)."""
    return PolySystem(sys.n, tuple(_permute_poly(f, perm) for f in sys.polys))


def _permute_poly(f: Polynomial, perm) -> Polynomial:
    from nullcert.polynomial import canonicalize

    return canonicalize(f.n, [Term(t.coeff, tuple(t.mono[p] for p in perm)) for t in f.terms])


def unpermute_certificate(cert: Certificate, perm) -> Certificate:
    """Map a certificate of ``permute_system(sys, perm)`` back to ``sys``."""
    inv = [0] * len(perm)
    for j, p in enumerate(perm):
        inv[p] = j
    g = tuple(_permute_poly(gi, inv) for gi in cert.g)
    return Certificate(g, None, cert.strategy, cert.zeroed_params)


def presort_variables(sys: PolySystem) -> tuple[PolySystem, tuple[int, ...]]:
    """Variable order minimising the bracket.

    Exhaustive over all orders for ``n <= 8`` (ties go to the
    lexicographically smallest permutation); otherwise ascending ``d_j``.
    """
    n = sys.n
    if n == 1:
        return sys, (0,)
    if n <= EXHAUSTIVE_PRESORT_MAX_N:
        best = best_val = None
        for perm in itertools.permutations(range(n)):
            val = theorem_bound(system_stats(permute_system(sys, perm)))
            if best_val is None or val < best_val:
                best, best_val = perm, val
    else:
        d = system_stats(sys).d
        best = tuple(sorted(range(n), key=lambda j: (d[j], j)))
    return permute_system(sys, best), tuple(best)


# --- benchmark runs -------------------------------------------------------------

def _decimal(q: Fraction, places: int = 6) -> str:
    scaled = q * 10 ** places
    whole = scaled.numerator // scaled.denominator
    if 2 * (scaled - whole) >= 1:
        whole += 1
    s = str(whole).rjust(places + 1, "0")
    return f"{s[:-places]}.{s[-places:]}"


def _bench_one(args) -> list[str]:
    path, strategy, ansatz, pivot_rule, presort, degree = args
    from nullcert.frontend.documents import parse_system

    ident = Path(path).stem
    try:
        sys = parse_system(Path(path).read_text(encoding="utf-8"))
        if presort:
            sys, _ = presort_variables(sys)
        stats = system_stats(sys)
        out, counter = counted_solve(sys, strategy, ansatz, pivot_rule, degree=degree)
    except Exception as exc:  # one bad instance must not stop the run
        msg = f"error: {type(exc).__name__}: {exc}".replace("\n", " ")
        return [ident, "", "", "", "", msg, strategy, "", "", "", "", "", ""]
    bracket = theorem_bound(stats)
    ratio = _decimal(Fraction(counter.total, bracket)) if bracket else "inf"
    outcome = "certificate" if isinstance(out, Certificate) else "no-solution"
    return [
        ident, str(stats.n), str(stats.k), str(stats.m_sigma), ";".join(map(str, stats.d)),
        outcome, out.strategy, str(counter.assignments), str(counter.arith_ops),
        str(counter.comparisons), str(bracket), ratio, str(counter.bits),
    ]


def bench_run(corpus_dir, strategy: str = "auto", ansatz: str = "paper-rank",
              pivot_rule: str = "paper-tuple", presort: bool = False, jobs: int = 1,
              degree: int | None = None) -> list[list[str]]:
    """One row per ``*.json`` system document in ``corpus_dir``, in filename order."""
    files = sorted(p for p in Path(corpus_dir).iterdir() if p.suffix == ".json" and p.is_file())
    tasks = [(str(p), strategy, ansatz, pivot_rule, presort, degree) for p in files]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1)) as pool:
            return list(pool.map(_bench_one, tasks))
    return [_bench_one(t) for t in tasks]


def bench_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(rows)
    return buf.getvalue()
