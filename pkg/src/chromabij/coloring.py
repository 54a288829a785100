"""Vertex colorings by positive integers."""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from . import budget as _budget
from .errors import InvalidInputError
from .graph import Graph, Orientation, component_count

Coloring = tuple[int, ...]


def check_coloring(g: Graph, k: Sequence[int]) -> Coloring:
    k = tuple(k)
    if len(k) != g.n:
        raise InvalidInputError(f"coloring has {len(k)} entries for {g.n} vertices")
    for c in k:
        if not isinstance(c, int) or c < 1:
            raise InvalidInputError(f"colors must be positive integers, got {c!r}")
    return k


def is_proper(g: Graph, k: Sequence[int]) -> bool:
    k = check_coloring(g, k)
    return all(k[u] != k[v] for u, v in g.edges)


def monochromatic_edges(g: Graph, k: Sequence[int]) -> list[int]:
    k = check_coloring(g, k)
    return [i for i, (u, v) in enumerate(g.edges) if k[u] == k[v]]


def is_monochromatic_on(g: Graph, s, k: Sequence[int]) -> bool:
    """True iff ``k`` is constant on every component of ``(V, s)``.

    Constant on each edge of ``s`` is the same thing.
    """
    k = check_coloring(g, k)
    return all(k[g.edges[i][0]] == k[g.edges[i][1]] for i in g.subset(s))


def count_monochromatic_colorings(g: Graph, s, t: int) -> int:
    """Number of ``[t]``-colorings constant on the components of ``s``."""
    if t < 1:
        raise InvalidInputError("t must be a positive integer")
    return t ** component_count(g, s)


def is_compatible(o: Orientation, k: Sequence[int]) -> bool:
    """True iff every arc ``u -> v`` of ``o`` has ``k[u] <= k[v]``."""
    k = check_coloring(o.graph, k)
    return all(k[u] <= k[v] for u, v in o.arcs)


def enumerate_colorings(g: Graph, t: int, budget: int | None = None) -> Iterator[Coloring]:
    """All ``t**n`` colorings ``V -> [t]`` in lexicographic order."""
    if t < 1:
        raise InvalidInputError("t must be a positive integer")
    _budget.check(t ** g.n, _budget.resolve(budget, _budget.DEFAULT_COLORING_BUDGET),
                  f"{t}^{g.n} colorings")
    return product(range(1, t + 1), repeat=g.n)
