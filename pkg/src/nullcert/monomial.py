"""Monomials as exponent tuples under the natural order.

The natural order is graded: lower total degree first; within one degree the
monomial with the higher exponent on the first differing variable comes
first.  For two variables this gives ``1, z1, z2, z1^2, z1*z2, z2^2, ...``.
Ranks are 1-based positions in that enumeration.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, Sequence, Tuple

Monomial = Tuple[int, ...]

BEFORE, EQUAL, AFTER = -1, 0, 1


def check_monomial(m: Sequence[int], n: int | None = None) -> Monomial:
    m = tuple(m)
    if n is not None and len(m) != n:
        raise ValueError(f"monomial {m} has {len(m)} exponents, expected {n}")
    for e in m:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"monomial {m} has an invalid exponent {e!r}")
    return m


def degree(m: Monomial) -> int:
    return sum(m)


def natural_key(m: Monomial) -> tuple:
    """Sort key realising the natural order."""
    return (sum(m), tuple(-e for e in m))


def mono_compare(a: Monomial, b: Monomial) -> int:
    """Return BEFORE, EQUAL or AFTER for ``a`` relative to ``b``."""
    if len(a) != len(b):
        raise ValueError(f"cannot compare monomials of lengths {len(a)} and {len(b)}")
    da, db = sum(a), sum(b)
    if da != db:
        return BEFORE if da < db else AFTER
    for x, y in zip(a, b):
        if x != y:
            return BEFORE if x > y else AFTER
    return EQUAL


def count_of_degree(n: int, d: int) -> int:
    """Number of monomials in ``n`` variables with total degree exactly ``d``."""
    if d < 0:
        return 0
    if n == 0:
        return 1 if d == 0 else 0
    return comb(d + n - 1, n - 1)


def count_up_to_degree(n: int, d: int) -> int:
    """Number of monomials in ``n`` variables with total degree at most ``d``."""
    if d < 0:
        return 0
    return comb(n + d, n)


@lru_cache(maxsize=1 << 16)
def mono_rank(m: Monomial) -> int:
    n = len(m)
    if n == 0:
        return 1
    rem = sum(m)
    pos = count_up_to_degree(n, rem - 1)
    for i in range(n - 1):
        e = m[i]
        # every monomial with a higher exponent here (same prefix) comes first
        tail = n - i - 1
        for hi in range(e + 1, rem + 1):
            pos += count_of_degree(tail, rem - hi)
        rem -= e
    return pos + 1


def mono_unrank(N: int, n: int) -> Monomial:
    if N < 1:
        raise ValueError(f"rank must be positive, got {N}")
    if n == 0:
        if N != 1:
            raise ValueError("only rank 1 exists in zero variables")
        return ()
    idx = N - 1
    d = 0
    while count_up_to_degree(n, d) <= idx:
        d += 1
    pos = idx - count_up_to_degree(n, d - 1)
    rem = d
    exps = []
    for i in range(n - 1):
        tail = n - i - 1
        for e in range(rem, -1, -1):
            block = count_of_degree(tail, rem - e)
            if pos < block:
                exps.append(e)
                rem -= e
                break
            pos -= block
    exps.append(rem)
    return tuple(exps)


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All monomials of total degree ``d`` in natural order."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            yield (e,) + rest


def monomials_up_to(n: int, d: int) -> Iterator[Monomial]:
    """All monomials of total degree at most ``d`` in natural order."""
    for t in range(d + 1):
        yield from monomials_of_degree(n, t)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_str(m: Monomial) -> str:
    parts = []
    for j, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"z{j}")
        elif e > 1:
            parts.append(f"z{j}^{e}")
    return "*".join(parts) if parts else "1"
