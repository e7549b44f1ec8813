"""JSON documents for systems and certificates.

System document::

    {"n": 2, "polys": [{"terms": [{"re": "-1/1", "im": "0/1", "e": [0, 0]}, ...]}]}

Coefficients are exact reduced fractions ``"a/b"`` (a bare integer ``"a"`` is
accepted on input).  Terms are emitted in natural order; input terms may come
in any order but a monomial may appear only once per polynomial.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd
from typing import Any

from nullcert.certificate import ANSATZ_KINDS, AnsatzSpec, Certificate, NoSolution
from nullcert.monomial import natural_key
from nullcert.polynomial import Polynomial, PolySystem, Term
from nullcert.scalar import GaussianRational

_FRACTION = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")


class DocumentError(ValueError):
    """Malformed document; the message names the offending location."""


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: Any, where: str) -> Fraction:
    if not isinstance(text, str):
        raise DocumentError(f"{where}: expected a fraction string, got {json.dumps(text)}")
    m = _FRACTION.match(text)
    if not m:
        raise DocumentError(f"{where}: bad fraction syntax {text!r}")
    sign, num, den = m.group(1), int(m.group(2)), m.group(3)
    if m.group(2) != str(num):
        raise DocumentError(f"{where}: leading zeros in {text!r}")
    den = 1 if den is None else int(den)
    if den == 0:
        raise DocumentError(f"{where}: zero denominator in {text!r}")
    if m.group(3) is not None and m.group(3) != str(den):
        raise DocumentError(f"{where}: leading zeros in {text!r}")
    if gcd(num, den) != 1 and not (num == 0 and den == 1):
        raise DocumentError(f"{where}: fraction {text!r} is not reduced")
    if num == 0 and sign:
        raise DocumentError(f"{where}: negative zero {text!r}")
    return Fraction(-num if sign else num, den)


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: malformed JSON ({exc.msg})") from None


def _expect(obj, typ, where: str):
    if not isinstance(obj, typ) or (typ is int and isinstance(obj, bool)):
        name = typ.__name__ if isinstance(typ, type) else "/".join(t.__name__ for t in typ)
        raise DocumentError(f"{where}: expected {name}, got {json.dumps(obj)[:40]}")
    return obj


def _parse_n(doc: dict, where: str = "document") -> int:
    _expect(doc, dict, where)
    if "n" not in doc:
        raise DocumentError(f"{where}: missing key 'n'")
    n = _expect(doc["n"], int, f"{where}: 'n'")
    if n < 1:
        raise DocumentError(f"{where}: 'n' must be at least 1")
    return n


def _parse_poly(obj: Any, n: int, where: str) -> Polynomial:
    _expect(obj, dict, where)
    terms = _expect(obj.get("terms"), list, f"{where}: 'terms'")
    seen: dict = {}
    for t_idx, t in enumerate(terms, start=1):
        tw = f"{where}, term {t_idx}"
        _expect(t, dict, tw)
        unknown = set(t) - {"re", "im", "e"}
        if unknown:
            raise DocumentError(f"{tw}: unknown keys {sorted(unknown)}")
        re_ = parse_fraction(t.get("re", "0/1"), f"{tw}: 're'")
        im_ = parse_fraction(t.get("im", "0/1"), f"{tw}: 'im'")
        e = _expect(t.get("e"), list, f"{tw}: 'e'")
        if len(e) != n:
            raise DocumentError(f"{tw}: exponent list has length {len(e)}, expected {n}")
        for x in e:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise DocumentError(f"{tw}: exponents must be non-negative integers")
        mono = tuple(e)
        if mono in seen:
            raise DocumentError(f"{tw}: duplicate monomial {list(mono)} (first at term {seen[mono]})")
        if not re_ and not im_:
            raise DocumentError(f"{tw}: zero coefficient")
        seen[mono] = t_idx
    out = []
    for t in terms:
        c = GaussianRational(parse_fraction(t.get("re", "0/1"), ""), parse_fraction(t.get("im", "0/1"), ""))
        out.append(Term(c, tuple(t["e"])))
    out.sort(key=lambda t: natural_key(t.mono))
    return Polynomial(n, tuple(out))


def _poly_lines(p: Polynomial, indent: str) -> str:
    if not p.terms:
        return '{"terms": []}'
    rows = [
        f'{indent}  {{"re": "{format_fraction(t.coeff.re)}", "im": "{format_fraction(t.coeff.im)}", '
        f'"e": {json.dumps(list(t.mono))}}}'
        for t in p.terms
    ]
    return '{"terms": [\n' + ",\n".join(rows) + f"\n{indent}]}}"


def _poly_list(polys, indent: str = "    ") -> str:
    if not polys:
        return "[]"
    return "[\n" + ",\n".join(indent + _poly_lines(p, indent) for p in polys) + "\n  ]"


def parse_system(text: str) -> PolySystem:
    doc = _loads(text)
    n = _parse_n(doc)
    polys = _expect(doc.get("polys"), list, "document: 'polys'")
    if not polys:
        raise DocumentError("document: 'polys' must be non-empty")
    return PolySystem(n, tuple(_parse_poly(p, n, f"poly {i}") for i, p in enumerate(polys, start=1)))


def emit_system(sys: PolySystem) -> str:
    return f'{{\n  "n": {sys.n},\n  "polys": {_poly_list(sys.polys)}\n}}\n'


def _ansatz_doc(a: AnsatzSpec) -> str:
    bases = json.dumps([[list(m) for m in b] for b in a.bases], separators=(",", ":"))
    caps = json.dumps(list(a.caps)) if a.caps is not None else "null"
    degree = json.dumps(a.degree)
    return f'{{"kind": "{a.kind}", "degree": {degree}, "caps": {caps}, "bases": {bases}}}'


def emit_certificate(cert: Certificate, n: int) -> str:
    ansatz = _ansatz_doc(cert.ansatz) if cert.ansatz is not None else "null"
    return (
        f'{{\n  "n": {n},\n  "g": {_poly_list(cert.g)},\n'
        f'  "ansatz": {ansatz},\n'
        f'  "strategy": {json.dumps(cert.strategy)},\n'
        f'  "zeroed": {json.dumps(list(cert.zeroed_params))}\n}}\n'
    )


def parse_certificate(text: str) -> tuple[int, Certificate]:
    """Return ``(n, certificate)``."""
    doc = _loads(text)
    n = _parse_n(doc)
    g = _expect(doc.get("g"), list, "document: 'g'")
    polys = tuple(_parse_poly(p, n, f"g{i}") for i, p in enumerate(g, start=1))
    ansatz = None
    a = doc.get("ansatz")
    if a is not None:
        _expect(a, dict, "ansatz")
        kind = a.get("kind")
        if kind not in ANSATZ_KINDS:
            raise DocumentError(f"ansatz: unknown kind {json.dumps(kind)}")
        bases_doc = _expect(a.get("bases"), list, "ansatz: 'bases'")
        if len(bases_doc) != len(polys):
            raise DocumentError(f"ansatz: {len(bases_doc)} bases for {len(polys)} polynomials")
        bases = []
        for i, b in enumerate(bases_doc, start=1):
            _expect(b, list, f"ansatz: basis {i}")
            ms = []
            for m in b:
                if not isinstance(m, list) or len(m) != n or any(
                        not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in m):
                    raise DocumentError(f"ansatz: basis {i} has a malformed monomial {json.dumps(m)}")
                ms.append(tuple(m))
            bases.append(tuple(ms))
        caps = a.get("caps")
        try:
            ansatz = AnsatzSpec(kind, tuple(bases), degree=a.get("degree"),
                                caps=tuple(caps) if caps is not None else None)
        except ValueError as exc:
            raise DocumentError(f"ansatz: {exc}") from None
    strategy = doc.get("strategy", "")
    _expect(strategy, str, "document: 'strategy'")
    zeroed = _expect(doc.get("zeroed", []), list, "document: 'zeroed'")
    try:
        cert = Certificate(polys, ansatz, strategy, tuple(str(z) for z in zeroed))
    except ValueError as exc:
        raise DocumentError(f"certificate: {exc}") from None
    return n, cert


def emit_no_solution(outcome: NoSolution) -> str:
    doc = {
        "status": "no-solution",
        "level": outcome.level,
        "equation": outcome.equation,
        "message": outcome.headline,
        "detail": outcome.message,
        "conclusive": outcome.conclusive,
        "strategy": outcome.strategy,
        "ansatz": outcome.ansatz.kind if outcome.ansatz is not None else None,
    }
    return json.dumps(doc, indent=2) + "\n"
