"""Depth-first enumeration of spanning subgraphs.

Both expansions of the chromatic invariants walk the edges in their fixed
order and decide, edge by edge, whether it joins the subset. The state is a
component labelling of the vertices, shared (never mutated) between sibling
branches.

In NBC mode a branch dies as soon as the edge under consideration has both
endpoints in one component: the earlier chosen edges then contain a path
between them, and that path is a broken circuit no matter what is decided
later. The surviving leaves are exactly the NBC subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import budget as _budget
from .graph import Graph


@dataclass
class ExpansionStats:
    subsets: int = 0
    nodes: int = 0


@dataclass(frozen=True)
class Leaf:
    mask: int
    size: int
    components: int
    labels: tuple[int, ...]

    def subset(self) -> frozenset[int]:
        mask, i, out = self.mask, 0, []
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return frozenset(out)

    def shape(self) -> tuple[int, ...]:
        """Component sizes in weakly decreasing order."""
        counts: dict[int, int] = {}
        for x in self.labels:
            counts[x] = counts.get(x, 0) + 1
        return tuple(sorted(counts.values(), reverse=True))


def leaves(g: Graph, nbc_only: bool, budget: int | None = None,
           stats: ExpansionStats | None = None) -> Iterator[Leaf]:
    """Yield every subset (or every NBC subset) with its component data."""
    limit = _budget.resolve(budget)
    if not nbc_only:
        _budget.check(2 ** g.m, limit, f"2^{g.m} spanning subgraphs")
    if stats is None:
        stats = ExpansionStats()
    edges, m = g.edges, g.m
    stack = [(0, tuple(range(g.n)), g.n, 0, 0)]
    while stack:
        pos, labels, comps, mask, size = stack.pop()
        stats.nodes += 1
        if stats.nodes > 2 * limit:
            _budget.check(stats.nodes, 2 * limit, "subset search nodes")
        if pos == m:
            stats.subsets += 1
            yield Leaf(mask, size, comps, labels)
            continue
        u, v = edges[pos]
        lu, lv = labels[u], labels[v]
        if lu == lv:
            if nbc_only:
                continue
            stack.append((pos + 1, labels, comps, mask | 1 << pos, size + 1))
        else:
            merged = tuple(lu if x == lv else x for x in labels)
            stack.append((pos + 1, merged, comps - 1, mask | 1 << pos, size + 1))
        stack.append((pos + 1, labels, comps, mask, size))


def signed_component_counts(g: Graph, nbc_only: bool, budget: int | None = None,
                            stats: ExpansionStats | None = None) -> dict[int, int]:
    """``{c: sum of (-1)^|S| over enumerated S with c(S) = c}``.

    Same search as :func:`leaves` without materializing leaves; this is the
    hot loop behind the chromatic polynomial.
    """
    limit = _budget.resolve(budget)
    if not nbc_only:
        _budget.check(2 ** g.m, limit, f"2^{g.m} spanning subgraphs")
    if stats is None:
        stats = ExpansionStats()
    edges, m = g.edges, g.m
    acc: dict[int, int] = {}
    stack = [(0, tuple(range(g.n)), g.n, 0)]
    nodes = 0
    subsets = 0
    while stack:
        pos, labels, comps, size = stack.pop()
        nodes += 1
        if pos == m:
            subsets += 1
            acc[comps] = acc.get(comps, 0) + (-1 if size & 1 else 1)
            continue
        u, v = edges[pos]
        lu, lv = labels[u], labels[v]
        if lu == lv:
            if nbc_only:
                continue
            stack.append((pos + 1, labels, comps, size + 1))
        else:
            stack.append((pos + 1, tuple(lu if x == lv else x for x in labels), comps - 1, size + 1))
        stack.append((pos + 1, labels, comps, size))
        if nodes > 2 * limit:
            _budget.check(nodes, 2 * limit, "subset search nodes")
    stats.nodes += nodes
    stats.subsets += subsets
    return {c: a for c, a in acc.items() if a}
