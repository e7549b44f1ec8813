"""DIMACS CNF input and the CNF-to-polynomial encoding."""

from __future__ import annotations

from dataclasses import dataclass

from nullcert.polynomial import Polynomial, PolySystem, poly_mul


class DimacsError(ValueError):
    pass


@dataclass(frozen=True)
class CnfInstance:
    V: int
    clauses: tuple[tuple[int, ...], ...]
    allow_empty: bool = False

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.V < 0:
            raise ValueError("variable count must be non-negative")
        for idx, clause in enumerate(self.clauses, start=1):
            if not clause and not self.allow_empty:
                raise ValueError(f"clause {idx} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.V:
                    raise ValueError(f"clause {idx}: literal {lit} out of range 1..{self.V}")

    def satisfied_by(self, assignment) -> bool:
        """``assignment[v-1]`` is the truth value of variable v."""
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)


def parse_dimacs(text: str) -> CnfInstance:
    V = C = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("c"):
            continue
        if s.startswith("%"):
            break
        if s.startswith("p"):
            parts = s.split()
            if V is not None:
                raise DimacsError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: expected 'p cnf V C'")
            try:
                V, C = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: non-integer counts in problem line") from None
            if V < 0 or C < 0:
                raise DimacsError(f"line {lineno}: negative counts in problem line")
            continue
        if V is None:
            raise DimacsError(f"line {lineno}: clause before the 'p cnf' header")
        for tok in s.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > V:
                raise DimacsError(f"line {lineno}: literal {lit} out of range 1..{V}")
            else:
                current.append(lit)
    if V is None:
        raise DimacsError("missing 'p cnf V C' header")
    if current:
        raise DimacsError(f"unterminated final clause {current}")
    if len(clauses) != C:
        raise DimacsError(f"header declares {C} clauses but {len(clauses)} were found")
    return CnfInstance(V, tuple(clauses), allow_empty=True)


def emit_dimacs(cnf: CnfInstance) -> str:
    lines = [f"p cnf {cnf.V} {len(cnf.clauses)}"]
    lines += [" ".join(map(str, c + (0,))) for c in cnf.clauses]
    return "\n".join(lines) + "\n"


def encode_3sat(cnf: CnfInstance) -> PolySystem:
    """One polynomial ``z_v^2 - z_v`` per variable, then one per clause.

    A clause becomes the product of ``1 - z_v`` for each positive literal and
    ``z_v`` for each negative one, which vanishes exactly when the clause is
    satisfied by the 0/1 point (z_v = 1 meaning true).
    """
    n = max(cnf.V, 1)
    one = Polynomial.constant(n, 1)
    polys = []
    for v in range(1, cnf.V + 1):
        z = Polynomial.var(n, v)
        polys.append(z * z - z)
    for clause in cnf.clauses:
        p = one
        for lit in clause:
            z = Polynomial.var(n, abs(lit))
            p = poly_mul(p, one - z if lit > 0 else z)
        polys.append(p)
    if not polys:
        polys.append(Polynomial.zero(n))
    return PolySystem(n, tuple(polys))
