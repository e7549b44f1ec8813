"""Graph k-colouring as a polynomial system (vertices take k-th roots of unity)."""

from __future__ import annotations

from nullcert.polynomial import Polynomial, PolySystem, canonicalize


class EdgeListError(ValueError):
    pass


def parse_edges(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Read an edge list and return ``(vertex count, edges)``.

    Accepts plain ``u v`` lines and DIMACS graph lines (``p edge V E``,
    ``e u v``); ``c`` and ``#`` lines are comments.  Vertices are 1-based.
    """
    declared = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] in ("c", "#") or parts[0].startswith("#"):
            continue
        if parts[0] == "p":
            if len(parts) != 4:
                raise EdgeListError(f"line {lineno}: expected 'p edge V E'")
            try:
                declared = int(parts[2])
            except ValueError:
                raise EdgeListError(f"line {lineno}: bad vertex count {parts[2]!r}") from None
            continue
        if parts[0] == "e":
            parts = parts[1:]
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected two vertex ids")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: vertex ids must be integers") from None
        if u < 1 or v < 1:
            raise EdgeListError(f"line {lineno}: vertex ids are 1-based")
        if declared is not None and max(u, v) > declared:
            raise EdgeListError(f"line {lineno}: vertex {max(u, v)} exceeds declared count {declared}")
        edges.append((u, v))
    V = declared if declared is not None else max((max(e) for e in edges), default=0)
    return V, edges


def encode_kcoloring(edges, k: int, n_vertices: int | None = None) -> PolySystem:
    """``z_v^k - 1`` per vertex and ``sum_d z_u^(k-1-d) z_v^d`` per edge.

    The edge polynomial equals ``(z_u^k - z_v^k)/(z_u - z_v)``, so on roots of
    unity it vanishes iff ``z_u != z_v``.  A self-loop gives ``k z_u^(k-1)``,
    which has no root among roots of unity, so the system is infeasible as it
    should be.  Repeated edges are encoded once.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    edges = [tuple(e) for e in edges]
    V = n_vertices if n_vertices is not None else max((max(e) for e in edges), default=1)
    V = max(V, 1)
    for u, v in edges:
        if not (1 <= u <= V and 1 <= v <= V):
            raise ValueError(f"edge ({u}, {v}) references a vertex outside 1..{V}")
    polys = []
    for v in range(1, V + 1):
        mono = tuple(k if j == v - 1 else 0 for j in range(V))
        polys.append(canonicalize(V, [(1, mono), (-1, (0,) * V)]))
    seen = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        raw = []
        for d in range(k):
            mono = [0] * V
            mono[u - 1] += k - 1 - d
            mono[v - 1] += d
            raw.append((1, tuple(mono)))
        polys.append(canonicalize(V, raw))
    return PolySystem(V, tuple(polys))
