"""Sparse multivariate polynomials over Q(i).

A :class:`Polynomial` keeps its terms strictly increasing in the natural
order, with like monomials merged and zero coefficients dropped, so two
polynomials are equal exactly when their term tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Optional, Sequence

from nullcert import counting
from nullcert.monomial import Monomial, check_monomial, mono_compare, mono_str, natural_key
from nullcert.scalar import ONE, ZERO, GaussianRational, Scalar


class Term(NamedTuple):
    coeff: GaussianRational
    mono: Monomial


def _counting_cmp(a, b):
    counting.compare()
    return mono_compare(a, b)


def _sorted_monos(monos):
    if counting.active() is None:
        return sorted(monos, key=natural_key)
    return sorted(monos, key=cmp_to_key(_counting_cmp))


@dataclass(frozen=True)
class Polynomial:
    n: int
    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("variable count must be non-negative")
        prev = None
        for t in self.terms:
            if len(t.mono) != self.n:
                raise ValueError(f"term {t} does not have {self.n} exponents")
            if not t.coeff:
                raise ValueError("zero coefficient in canonical polynomial")
            if prev is not None and natural_key(prev) >= natural_key(t.mono):
                raise ValueError("terms are not strictly increasing in natural order")
            prev = t.mono

    # construction
    @classmethod
    def _trusted(cls, n: int, terms: tuple[Term, ...]) -> "Polynomial":
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._trusted(n, ())

    @classmethod
    def constant(cls, n: int, c: Scalar = 1) -> "Polynomial":
        c = GaussianRational.coerce(c)
        if not c:
            return cls.zero(n)
        return cls._trusted(n, (Term(c, (0,) * n),))

    @classmethod
    def var(cls, n: int, j: int) -> "Polynomial":
        """The variable ``z_j`` (1-based) in ``n`` variables."""
        if not 1 <= j <= n:
            raise ValueError(f"variable index {j} out of range 1..{n}")
        mono = tuple(1 if i == j - 1 else 0 for i in range(n))
        return cls._trusted(n, (Term(ONE, mono),))

    @classmethod
    def from_dict(cls, n: int, data: dict) -> "Polynomial":
        """Build from ``{monomial: coeff}``; zero coefficients are dropped."""
        return canonicalize(n, ((c, m) for m, c in data.items()))

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def monomials(self) -> list[Monomial]:
        return [t.mono for t in self.terms]

    def to_dict(self) -> dict:
        return {t.mono: t.coeff for t in self.terms}

    def coeff(self, mono: Monomial) -> GaussianRational:
        for t in self.terms:
            if t.mono == mono:
                return t.coeff
        return ZERO

    def total_degree(self) -> Optional[int]:
        """Largest total degree, or ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        return sum(self.terms[-1].mono)

    def degree_in(self, j: int) -> Optional[int]:
        """Largest exponent of ``z_j`` (1-based), ``None`` for zero."""
        if not self.terms:
            return None
        return max(t.mono[j - 1] for t in self.terms)

    # arithmetic
    def _check_n(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, -other)

    def __neg__(self):
        return Polynomial._trusted(self.n, tuple(Term(-t.coeff, t.mono) for t in self.terms))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        try:
            c = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Polynomial":
        c = GaussianRational.coerce(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._trusted(self.n, tuple(Term(t.coeff * c, t.mono) for t in self.terms))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Polynomial.constant(self.n, 1)
        for _ in range(e):
            result = poly_mul(result, self)
        return result

    def __call__(self, *point):
        return poly_eval(self, point)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for t in self.terms:
            c = t.coeff
            neg = not c.im and c.re < 0
            if neg:
                c = -c
            m = mono_str(t.mono)
            if m == "1":
                body = str(c)
            elif c == 1:
                body = m
            else:
                body = f"{c}*{m}"
            if not out:
                out = f"-{body}" if neg else body
            else:
                out += f" - {body}" if neg else f" + {body}"
        return out


def canonicalize(n: int, raw: Iterable) -> Polynomial:
    """Merge like monomials, drop zeros and sort into natural order.

    ``raw`` yields ``(coeff, monomial)`` pairs or :class:`Term` values.
    """
    acc: dict = {}
    for coeff, mono in raw:
        mono = check_monomial(mono, n)
        coeff = GaussianRational.coerce(coeff)
        if mono in acc:
            acc[mono] = acc[mono] + coeff
        else:
            acc[mono] = coeff
    return _from_acc(n, acc)


def _from_acc(n: int, acc: dict) -> Polynomial:
    monos = _sorted_monos([m for m, c in acc.items() if c])
    counting.assign(len(monos))
    return Polynomial._trusted(n, tuple(Term(acc[m], m) for m in monos))


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check_n(b)
    if not b.terms:
        return a
    if not a.terms:
        return b
    acc = {t.mono: t.coeff for t in a.terms}
    for c, m in b.terms:
        if m in acc:
            acc[m] = acc[m] + c
        else:
            acc[m] = c
    return _from_acc(a.n, acc)


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return poly_add(a, -b)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check_n(b)
    if not a.terms or not b.terms:
        return Polynomial.zero(a.n)
    acc: dict = {}
    for ca, ma in a.terms:
        for cb, mb in b.terms:
            m = tuple(x + y for x, y in zip(ma, mb))
            p = ca * cb
            if m in acc:
                acc[m] = acc[m] + p
            else:
                acc[m] = p
    return _from_acc(a.n, acc)


def poly_sum(polys: Iterable[Polynomial], n: int) -> Polynomial:
    acc: dict = {}
    for p in polys:
        if p.n != n:
            raise ValueError(f"variable count mismatch: {p.n} vs {n}")
        for c, m in p.terms:
            if m in acc:
                acc[m] = acc[m] + c
            else:
                acc[m] = c
    return _from_acc(n, acc)


def poly_eval(f: Polynomial, point: Sequence) -> GaussianRational:
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.n} variables")
    point = [GaussianRational.coerce(x) for x in point]
    powers: list[dict] = [{0: ONE} for _ in point]

    def pw(j, e):
        cache = powers[j]
        if e not in cache:
            cache[e] = point[j] ** e
        return cache[e]

    total = ZERO
    for c, m in f.terms:
        v = c
        for j, e in enumerate(m):
            if e:
                v = v * pw(j, e)
        total = total + v
    return total


def extract_coeffs(f: Polynomial, ell: int) -> list[tuple[int, Polynomial]]:
    """Decompose ``f`` as ``sum_j coeff_j * z_ell^j``.

    Coefficient polynomials live in the remaining ``n - 1`` variables (z_ell
    removed).  Only non-zero coefficients are listed, by ascending ``j``.
    """
    if not 1 <= ell <= f.n:
        raise ValueError(f"variable index {ell} out of range 1..{f.n}")
    k = ell - 1
    buckets: dict[int, list] = {}
    for c, m in f.terms:
        buckets.setdefault(m[k], []).append(Term(c, m[:k] + m[k + 1:]))
    out = []
    for j in sorted(buckets):
        # removing one variable can reorder terms; resort
        out.append((j, canonicalize(f.n - 1, buckets[j])))
    return out


def from_coeffs(coeffs: Iterable[tuple[int, Polynomial]], ell: int) -> Polynomial:
    """Inverse of :func:`extract_coeffs`."""
    raw = []
    n = None
    for j, p in coeffs:
        n = p.n + 1
        k = ell - 1
        for c, m in p.terms:
            raw.append((c, m[:k] + (j,) + m[k:]))
    if n is None:
        raise ValueError("cannot infer the variable count of an empty decomposition")
    return canonicalize(n, raw)


@dataclass(frozen=True)
class PolySystem:
    n: int
    polys: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))
        if self.n < 1:
            raise ValueError("a system needs at least one variable")
        if not self.polys:
            raise ValueError("a system needs at least one polynomial")
        for i, p in enumerate(self.polys, start=1):
            if p.n != self.n:
                raise ValueError(f"polynomial {i} has {p.n} variables, system has {self.n}")

    @property
    def k(self) -> int:
        return len(self.polys)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.polys) + "}"


def parse_poly(text: str, n: int) -> Polynomial:
    """Parse a small polynomial expression such as ``"z1^2*z2 - 3/2*z1 + i"``.

    Meant for tests and interactive use; documents use the JSON format.
    """
    import re

    from nullcert.scalar import I

    tokens = re.findall(r"\s*(z\d+|\d+(?:/\d+)?|i|[-+*^()])", text)
    if "".join(t.strip() for t in tokens) != re.sub(r"\s+", "", text):
        raise ValueError(f"cannot parse polynomial {text!r}")
    pos = 0

    def peek():
        return tokens[pos].strip() if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos].strip()
        pos += 1
        return tok

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        acc = term().scale(sign)
        while peek() in ("+", "-"):
            op = take()
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek() == "*":
            take()
            acc = acc * factor()
        return acc

    def factor():
        base = atom()
        if peek() == "^":
            take()
            e = take()
            if not e.isdigit():
                raise ValueError(f"bad exponent {e!r}")
            base = base ** int(e)
        return base

    def atom():
        tok = take()
        if tok == "(":
            v = expr()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return v
        if tok == "-":
            return -atom()
        if tok == "i":
            return Polynomial.constant(n, I)
        if tok.startswith("z"):
            return Polynomial.var(n, int(tok[1:]))
        from fractions import Fraction
        value = Polynomial.constant(n, Fraction(tok))
        # "2i" is how scalars print; read it as 2*i
        if pos < len(tokens) and tokens[pos] == "i":
            take()
            value = value * Polynomial.constant(n, I)
        return value

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


def system(n: int, *polys: str) -> PolySystem:
    """Convenience: ``system(2, "z1*z2 - 1", "z1")``."""
    return PolySystem(n, tuple(parse_poly(p, n) for p in polys))
