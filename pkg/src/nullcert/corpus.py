"""Seeded random instances for tests and benchmark corpora."""

from __future__ import annotations

import random

from nullcert.frontend.sat import CnfInstance
from nullcert.polynomial import PolySystem, canonicalize
from nullcert.scalar import GaussianRational

DEFAULT_SEED = 20240601


def random_poly(rng: random.Random, n: int, max_exp: int = 3, max_terms: int = 4, coeff_bound: int = 2):
    raw = []
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in range(n))
        re = im = 0
        while re == 0 and im == 0:
            re = rng.randint(-coeff_bound, coeff_bound)
            im = rng.randint(-coeff_bound, coeff_bound) if rng.random() < 0.3 else 0
        raw.append((GaussianRational(re, im), mono))
    return canonicalize(n, raw)


def random_system(
    rng: random.Random,
    max_n: int = 3,
    max_k: int = 3,
    max_exp: int = 3,
    max_terms: int = 4,
    coeff_bound: int = 2,
) -> PolySystem:
    """Sparse system with Gaussian-integer coefficients.

    Exponents are biased towards 0 and constant terms are common so that the
    corpus mixes feasible and infeasible instances.
    """
    n = rng.randint(1, max_n)
    k = rng.randint(1, max_k)
    polys = []
    for _ in range(k):
        e = rng.choice([1, 1, 2, max_exp])
        p = random_poly(rng, n, e, max_terms, coeff_bound)
        polys.append(p)
    return PolySystem(n, tuple(polys))


def random_corpus(seed: int, count: int, **kw) -> list[PolySystem]:
    rng = random.Random(seed)
    return [random_system(rng, **kw) for _ in range(count)]


def random_3cnf(rng: random.Random, V: int, m: int) -> CnfInstance:
    clauses = []
    for _ in range(m):
        width = min(3, V)
        vs = rng.sample(range(1, V + 1), width)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfInstance(V, tuple(clauses))
