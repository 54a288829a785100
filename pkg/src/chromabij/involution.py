"""The sign-reversing involution on (subgraph, coloring) pairs.

A pair ``(S, kappa)`` belongs to the set when ``kappa`` is constant on every
component of ``S``. If ``kappa`` is proper the pair is fixed; otherwise the
last monochromatic edge of the whole graph is toggled in ``S``. The coloring
never changes, so the map preserves weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .coloring import check_coloring, enumerate_colorings, is_monochromatic_on, is_proper
from .errors import PreconditionError
from .graph import Graph, broken_circuits
from .poly import chi_count
from .symfunc import MonomialMap


@dataclass(frozen=True)
class ColoredSubgraph:
    subset: frozenset[int]
    coloring: tuple[int, ...]


def make_pair(g: Graph, s, k: Sequence[int]) -> ColoredSubgraph:
    """Validated pair; raises if ``k`` is not monochromatic on ``s``."""
    s = g.subset(s)
    k = check_coloring(g, k)
    if not is_monochromatic_on(g, s, k):
        raise PreconditionError("coloring is not monochromatic on the components of the subset")
    return ColoredSubgraph(s, k)


def sign(p: ColoredSubgraph) -> int:
    return -1 if len(p.subset) % 2 else 1


def last_monochromatic_edge(g: Graph, k: Sequence[int]) -> int | None:
    """Index of the last edge whose endpoints share a color, or None."""
    k = check_coloring(g, k)
    for i in range(g.m - 1, -1, -1):
        u, v = g.edges[i]
        if k[u] == k[v]:
            return i
    return None


def iota(g: Graph, p: ColoredSubgraph) -> ColoredSubgraph:
    if not is_monochromatic_on(g, p.subset, p.coloring):
        raise PreconditionError("pair is not in the domain of the involution")
    e = last_monochromatic_edge(g, p.coloring)
    if e is None:
        return p
    return ColoredSubgraph(p.subset ^ {e}, p.coloring)


def colored_subgraphs(g: Graph, t: int, budget: int | None = None) -> Iterator[ColoredSubgraph]:
    """Every pair with colors in ``[t]``.

    For a fixed coloring the admissible subsets are exactly the subsets of
    its monochromatic edges.
    """
    for k in enumerate_colorings(g, t, budget):
        mono = [i for i, (u, v) in enumerate(g.edges) if k[u] == k[v]]
        for r in range(len(mono) + 1):
            for s in combinations(mono, r):
                yield ColoredSubgraph(frozenset(s), k)


@dataclass
class InvolutionReport:
    t: int
    size: int = 0
    fixed_points: int = 0
    signed_sum: int = 0
    chi: int = 0
    failures: list[tuple[str, ColoredSubgraph]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.fixed_points == self.chi == self.signed_sum


def verify_involution(g: Graph, t: int, budget: int | None = None,
                      max_failures: int = 20) -> InvolutionReport:
    """Check every stated property of the involution on all pairs over ``[t]``.

    Records a failure (with the offending pair) for each broken property:
    membership of the image, involution, sign reversal, the fixed-point set,
    weight preservation, and, on pairs whose subset contains a broken
    circuit, absence of fixed points and stability of that containment.
    """
    report = InvolutionReport(t=t)
    circuits = broken_circuits(g)

    def fail(name, p):
        if len(report.failures) < max_failures:
            report.failures.append((name, p))

    for p in colored_subgraphs(g, t, budget):
        report.size += 1
        report.signed_sum += sign(p)
        q = iota(g, p)
        if not is_monochromatic_on(g, q.subset, q.coloring):
            fail("image-in-domain", p)
            continue
        if iota(g, q) != p:
            fail("involution", p)
        if q.coloring != p.coloring:
            fail("weight-preserving", p)
        fixed = q == p
        should_be_fixed = not p.subset and is_proper(g, p.coloring)
        if fixed != should_be_fixed:
            fail("fixed-points", p)
        if fixed:
            report.fixed_points += 1
            if sign(p) != 1:
                fail("fixed-sign", p)
        else:
            if len(p.subset ^ q.subset) != 1 or sign(q) != -sign(p):
                fail("sign-reversing", p)
        contained = [b for b in circuits if b <= p.subset]
        if contained:
            if fixed:
                fail("broken-circuit-fixed-point", p)
            if any(not b <= q.subset for b in contained):
                fail("broken-circuit-stable", p)
    report.chi = chi_count(g, t, budget)
    return report


def signed_weight_sum(g: Graph, mu: int, budget: int | None = None) -> MonomialMap:
    """``sum sgn(S, kappa) x^kappa`` over all pairs with colors in ``[mu]``."""
    acc: dict[tuple[int, ...], int] = {}
    for p in colored_subgraphs(g, mu, budget):
        w = [0] * mu
        for c in p.coloring:
            w[c - 1] += 1
        w = tuple(w)
        acc[w] = acc.get(w, 0) + sign(p)
    return MonomialMap(mu, acc)
