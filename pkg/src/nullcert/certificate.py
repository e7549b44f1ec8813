"""Value types shared by the solvers, the oracles and the document layer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from nullcert.monomial import Monomial
from nullcert.polynomial import Polynomial

ANSATZ_KINDS = ("paper-rank", "total-degree", "per-variable", "brownawell")


class SizeLimitExceeded(RuntimeError):
    """A configured safety limit would be exceeded; nothing was computed."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what} is {size}, above the limit of {limit}")
        self.what = what
        self.size = size
        self.limit = limit


@dataclass(frozen=True)
class AnsatzSpec:
    """Monomial support allowed in each unknown g_i."""

    kind: str
    bases: tuple[tuple[Monomial, ...], ...]
    degree: Optional[int] = None
    caps: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ANSATZ_KINDS:
            raise ValueError(f"unknown ansatz kind {self.kind!r}")
        for basis in self.bases:
            if not basis:
                raise ValueError("ansatz bases must be non-empty")

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.bases)


def param_name(i: int, beta: Monomial) -> str:
    """Name of the unknown coefficient of z^beta in g_i (``i`` is 1-based)."""
    return f"b{i}[{','.join(map(str, beta))}]"


@dataclass(frozen=True)
class Certificate:
    g: tuple[Polynomial, ...]
    ansatz: Optional[AnsatzSpec]
    strategy: str
    zeroed_params: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(self.g))
        object.__setattr__(self, "zeroed_params", tuple(self.zeroed_params))
        if self.ansatz is not None:
            if len(self.ansatz.bases) != len(self.g):
                raise ValueError("certificate and ansatz disagree on k")
            for i, (gi, basis) in enumerate(zip(self.g, self.ansatz.bases), start=1):
                allowed = set(basis)
                for t in gi.terms:
                    if t.mono not in allowed:
                        raise ValueError(f"g{i} uses monomial {t.mono} outside its ansatz basis")

    @property
    def k(self) -> int:
        return len(self.g)


@dataclass(frozen=True)
class NoSolution:
    """No certificate was found.

    ``conclusive`` is true when the failure proves that no certificate exists
    within the ansatz that was tried (never beyond it); a non-conclusive
    failure comes from a heuristic choice and warrants escalation.
    """

    level: int
    equation: int
    message: str = ""
    conclusive: bool = True
    ansatz: Optional[AnsatzSpec] = field(default=None, compare=False)
    strategy: str = ""

    @property
    def headline(self) -> str:
        return f"No solution at Level {self.level}, Equation {self.equation}"

    def __str__(self):
        return f"{self.headline}: {self.message}" if self.message else self.headline


SolveOutcome = Union[Certificate, NoSolution]
