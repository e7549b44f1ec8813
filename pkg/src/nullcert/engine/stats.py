"""Size parameters of a system and the ansatz constructors built from them."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from nullcert.certificate import AnsatzSpec, SizeLimitExceeded
from nullcert.monomial import Monomial, mono_rank, monomials_up_to, natural_key
from nullcert.polynomial import PolySystem

# upper bound on the total degree accepted by the brownawell ansatz
BROWNAWELL_DEGREE_LIMIT = 12
# upper bound on the number of monomials per basis for any ansatz
BASIS_SIZE_LIMIT = 20_000


@dataclass(frozen=True)
class SystemStats:
    n: int
    k: int
    m_sigma: int
    m_i: tuple[int, ...]
    d: tuple[int, ...]
    # m_sigma^(l) and N^(l) for l = 1..n-1
    m_sigma_level: tuple[int, ...]
    N_level: tuple[int, ...]


def system_stats(sys: PolySystem) -> SystemStats:
    n = sys.n
    m_i = tuple(len(f) for f in sys.polys)
    d = [0] * n
    N = [1] * (n - 1)
    pairs = [0] * (n - 1)
    for f in sys.polys:
        seen: list[set] = [set() for _ in range(n - 1)]
        for t in f.terms:
            m = t.mono
            for j in range(n):
                if m[j] > d[j]:
                    d[j] = m[j]
            for ell in range(1, n):
                r = mono_rank(m[:ell])
                if r > N[ell - 1]:
                    N[ell - 1] = r
                seen[ell - 1].add((m[:ell], m[ell]))
        for ell in range(n - 1):
            pairs[ell] += len(seen[ell])
    return SystemStats(
        n=n,
        k=sys.k,
        m_sigma=sum(m_i),
        m_i=m_i,
        d=tuple(d),
        m_sigma_level=tuple(pairs),
        N_level=tuple(N),
    )


def paper_rank_basis(stats: SystemStats) -> tuple[Monomial, ...]:
    """Monomials whose restriction to z1..zl has rank at most N^(l) for every
    l < n, and whose z_n exponent is at most d_n."""
    n = stats.n
    if n == 1:
        return tuple((j,) for j in range(stats.d[0] + 1))
    # restriction to z1 has rank j + 1
    layer: list[Monomial] = [(j,) for j in range(stats.N_level[0])]
    for ell in range(2, n):
        bound = stats.N_level[ell - 1]
        nxt = []
        for m in layer:
            b = 0
            while mono_rank(m + (b,)) <= bound:
                nxt.append(m + (b,))
                b += 1
        layer = nxt
    full = [m + (b,) for m in layer for b in range(stats.d[n - 1] + 1)]
    if len(full) > BASIS_SIZE_LIMIT:
        raise SizeLimitExceeded("paper-rank basis size", len(full), BASIS_SIZE_LIMIT)
    return tuple(sorted(full, key=natural_key))


def _total_degree_basis(n: int, D: int) -> tuple[Monomial, ...]:
    from math import comb

    size = comb(n + D, n)
    if size > BASIS_SIZE_LIMIT:
        raise SizeLimitExceeded(f"total-degree({D}) basis size", size, BASIS_SIZE_LIMIT)
    return tuple(monomials_up_to(n, D))


def make_ansatz(
    sys: PolySystem,
    kind: str = "paper-rank",
    degree: int | None = None,
    caps=None,
    degree_limit: int = BROWNAWELL_DEGREE_LIMIT,
) -> AnsatzSpec:
    """Ansatz of the given kind; the same basis is used for every g_i.

    ``degree`` is required for ``total-degree``, ``caps`` (one exponent bound
    per variable) for ``per-variable``.  The brownawell kind uses total degree
    ``(max deg f_i)^n`` and refuses when that exceeds ``degree_limit``.
    """
    n, k = sys.n, sys.k
    if kind == "paper-rank":
        basis = paper_rank_basis(system_stats(sys))
        return AnsatzSpec(kind, (basis,) * k)
    if kind == "total-degree":
        if degree is None or degree < 0:
            raise ValueError("total-degree ansatz needs a non-negative degree")
        return AnsatzSpec(kind, (_total_degree_basis(n, degree),) * k, degree=degree)
    if kind == "per-variable":
        if caps is None or len(caps) != n or any(c < 0 for c in caps):
            raise ValueError(f"per-variable ansatz needs {n} non-negative caps")
        caps = tuple(int(c) for c in caps)
        basis = [m for m in monomials_up_to(n, sum(caps)) if all(e <= c for e, c in zip(m, caps))]
        if len(basis) > BASIS_SIZE_LIMIT:
            raise SizeLimitExceeded("per-variable basis size", len(basis), BASIS_SIZE_LIMIT)
        return AnsatzSpec(kind, (tuple(basis),) * k, caps=caps)
    if kind == "brownawell":
        dmax = max((f.total_degree() or 0) for f in sys.polys)
        D = dmax ** n
        if D > degree_limit:
            raise SizeLimitExceeded("brownawell total degree", D, degree_limit)
        if D > degree_limit // 2:
            warnings.warn(f"brownawell ansatz uses total degree {D}; the linear system may be large")
        return AnsatzSpec(kind, (_total_degree_basis(n, D),) * k, degree=D)
    raise ValueError(f"unknown ansatz kind {kind!r}")
