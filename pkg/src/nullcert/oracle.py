"""Ground truth: exact verification, box search for common zeros, and a dense
reference certificate search.

Nothing here may use the engine's elimination code; only the polynomial core
and the shared value types are imported, so the dense search stays an
independent check on the sparse solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm
from typing import Optional

import numpy as np

from nullcert.certificate import AnsatzSpec, Certificate, SizeLimitExceeded, param_name
from nullcert.monomial import monomials_up_to
from nullcert.polynomial import Polynomial, PolySystem, Term, canonicalize, poly_eval, poly_mul, poly_sum
from nullcert.scalar import ONE, ZERO, GaussianRational

BOX_POINT_LIMIT = 10_000_000
DENSE_CELL_LIMIT = 400_000


@dataclass(frozen=True)
class Residual:
    poly: Polynomial

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero()


@dataclass(frozen=True)
class ZeroWitness:
    point: tuple[GaussianRational, ...]
    values: tuple[GaussianRational, ...]


def verify(sys: PolySystem, cert: Certificate) -> Residual:
    """Exact ``sum f_i g_i - 1``; the certificate is valid iff this is zero."""
    if len(cert.g) != sys.k:
        raise ValueError(f"certificate has {len(cert.g)} polynomials, system has {sys.k}")
    for i, g in enumerate(cert.g, start=1):
        if g.n != sys.n:
            raise ValueError(f"g{i} has {g.n} variables, system has {sys.n}")
    total = poly_sum((poly_mul(f, g) for f, g in zip(sys.polys, cert.g)), sys.n)
    return Residual(total - Polynomial.constant(sys.n, 1))


# --- box search -------------------------------------------------------------

def _gaussian_integer_coeffs(f: Polynomial) -> list[tuple[int, int, tuple[int, ...]]]:
    """Scale ``f`` by the lcm of its denominators; same zero set."""
    L = 1
    for t in f.terms:
        L = lcm(L, t.coeff.re_den, t.coeff.im_den)
    return [(int(t.coeff.re * L), int(t.coeff.im * L), t.mono) for t in f.terms]


def _candidates(R: int) -> list[tuple[int, int]]:
    # scan order: real part ascending, then imaginary part ascending
    return [(a, b) for a in range(-R, R + 1) for b in range(-R, R + 1)]


def _magnitude_bound(polys, R: int) -> int:
    worst = 0
    for terms in polys:
        s = 0
        for re, im, m in terms:
            s += (abs(re) + abs(im)) * (2 * R) ** sum(m)
        worst = max(worst, s)
    return worst


def _box_numpy(polys, n: int, R: int) -> Optional[int]:
    cand = _candidates(R)
    cre = np.array([c[0] for c in cand], dtype=np.int64)
    cim = np.array([c[1] for c in cand], dtype=np.int64)
    M = len(cand)
    maxdeg = [0] * n
    for terms in polys:
        for _, _, m in terms:
            for j, e in enumerate(m):
                maxdeg[j] = max(maxdeg[j], e)
    pr = [np.ones(M, dtype=np.int64)]
    pi = [np.zeros(M, dtype=np.int64)]
    for _ in range(max(maxdeg)):
        a, b = pr[-1], pi[-1]
        pr.append(a * cre - b * cim)
        pi.append(a * cim + b * cre)

    mask = np.ones((M,) * n, dtype=bool)
    for terms in polys:
        vr = np.zeros((M,) * n, dtype=np.int64)
        vi = np.zeros((M,) * n, dtype=np.int64)
        for re, im, m in terms:
            tr = np.full((1,) * n, re, dtype=np.int64)
            ti = np.full((1,) * n, im, dtype=np.int64)
            for j, e in enumerate(m):
                if e:
                    shape = [1] * n
                    shape[j] = M
                    xr, xi = pr[e].reshape(shape), pi[e].reshape(shape)
                    tr, ti = tr * xr - ti * xi, tr * xi + ti * xr
            vr = vr + tr
            vi = vi + ti
        mask &= (vr == 0) & (vi == 0)
        if not mask.any():
            return None
    flat = np.flatnonzero(mask.ravel())
    return int(flat[0]) if len(flat) else None


def _box_python(polys, n: int, R: int) -> Optional[int]:
    cand = _candidates(R)
    for idx, point in enumerate(itertools.product(cand, repeat=n)):
        ok = True
        for terms in polys:
            sr = si = 0
            for re, im, m in terms:
                tr, ti = re, im
                for (xr, xi), e in zip(point, m):
                    for _ in range(e):
                        tr, ti = tr * xr - ti * xi, tr * xi + ti * xr
                sr += tr
                si += ti
            if sr or si:
                ok = False
                break
        if ok:
            return idx
    return None


def box_zero_search(sys: PolySystem, R: int, max_points: int = BOX_POINT_LIMIT) -> Optional[ZeroWitness]:
    """First common zero in the box ``|Re z_j|, |Im z_j| <= R`` of Z[i]^n.

    Points are scanned coordinate-major (z1 slowest), each coordinate with real
    part ascending from -R, then imaginary part ascending from -R.
    """
    if R < 0:
        raise ValueError("box radius must be non-negative")
    n = sys.n
    count = (2 * R + 1) ** (2 * n)
    if count > max_points:
        raise SizeLimitExceeded(f"box search point count for R={R}, n={n}", count, max_points)
    polys = [_gaussian_integer_coeffs(f) for f in sys.polys if f.terms]
    if _magnitude_bound(polys, R) < 2 ** 62:
        idx = _box_numpy(polys, n, R) if polys else 0
    else:
        idx = _box_python(polys, n, R)
    if idx is None:
        return None
    cand = _candidates(R)
    M = len(cand)
    digits = []
    for _ in range(n):
        idx, d = divmod(idx, M)
        digits.append(d)
    point = tuple(GaussianRational(*cand[d]) for d in reversed(digits))
    values = tuple(poly_eval(f, point) for f in sys.polys)
    if any(values):
        raise AssertionError(f"box search returned a non-zero point {point}")
    return ZeroWitness(point, values)


# --- dense reference certificate search ---------------------------------------

def dense_cert_search(sys: PolySystem, D: int, max_cells: int = DENSE_CELL_LIMIT) -> Optional[Certificate]:
    """Textbook Gauss-Jordan on the full dense system for g_i of total degree
    at most ``D``.  Returns a verified certificate or ``None``."""
    if D < 0:
        raise ValueError("degree bound must be non-negative")
    n, k = sys.n, sys.k
    basis = list(monomials_up_to(n, D))
    fdeg = max((f.total_degree() or 0) for f in sys.polys)
    row_monos = list(monomials_up_to(n, D + fdeg))
    ncols = k * len(basis)
    if len(row_monos) * (ncols + 1) > max_cells:
        raise SizeLimitExceeded("dense system cell count", len(row_monos) * (ncols + 1), max_cells)
    row_of = {m: r for r, m in enumerate(row_monos)}

    # column (i, beta) holds the coefficients of f_i * z^beta
    A = [[ZERO] * (ncols + 1) for _ in row_monos]
    A[row_of[(0,) * n]][ncols] = ONE
    col = 0
    for f in sys.polys:
        for beta in basis:
            shifted = poly_mul(f, Polynomial(n, (Term(ONE, beta),)))
            for c, m in shifted.terms:
                A[row_of[m]][col] = c
            col += 1

    pivot_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = ONE / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(A):
            break
    if any(A[i][ncols] for i in range(r, len(A))):
        return None

    x = [ZERO] * ncols
    for i, c in enumerate(pivot_cols):
        x[c] = A[i][ncols]
    pivots = set(pivot_cols)
    g = []
    for i in range(k):
        chunk = x[i * len(basis):(i + 1) * len(basis)]
        g.append(canonicalize(n, [(v, b) for v, b in zip(chunk, basis) if v]))
    zeroed = tuple(
        param_name(c // len(basis) + 1, basis[c % len(basis)]) for c in range(ncols) if c not in pivots
    )
    cert = Certificate(tuple(g), AnsatzSpec("total-degree", (tuple(basis),) * k, degree=D), "dense", zeroed)
    if not verify(sys, cert).is_zero:
        raise AssertionError("dense elimination produced a certificate that does not verify")
    return cert
