"""Bijections between acyclic orientations and NBC subgraphs.

The map ``phi`` walks the edges in order. At stage ``i`` the first ``i``
edges have been turned into an NBC set of undirected edges and the rest are
still arcs; the whole mixed graph stays acyclic. Step ``i`` unorients arc
``a_i`` when it points the normal way and unorienting it creates no cycle,
and deletes it otherwise. ``psi`` undoes one step at a time.

``Phi``/``Psi`` run the same bijection separately inside each color class of
a coloring, which matches acyclic orientations compatible with the coloring
with NBC sets on which the coloring is constant by components.

Every function takes an optional ``normal`` sequence (one bool per edge, in
the same convention as :class:`Orientation`) naming the normal direction of
each edge. By default the normal arc runs from the lower vertex to the
higher one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .coloring import check_coloring, is_compatible, is_monochromatic_on
from .errors import InvalidInputError, PreconditionError
from .graph import Graph, MixedGraph, Orientation, is_nbc, mixed_is_acyclic

UNORIENTED = "unoriented"
VIOLATED_A = "A"
VIOLATED_B = "B"
ABNORMAL = "abnormal"
NORMAL_A = "A'"
NORMAL_B = "B'"


@dataclass(frozen=True)
class StagedMixed:
    """Intermediate mixed graph after ``stage`` steps of ``phi``.

    ``edges`` holds the indices (all below ``stage``) kept as undirected
    edges; ``direction[j]`` for ``j >= stage`` is the orientation bit of the
    arc on edge ``j``, and is None for the decided edges.
    """

    graph: Graph
    stage: int
    edges: frozenset[int]
    direction: tuple[bool | None, ...]

    def to_mixed(self) -> MixedGraph:
        g = self.graph
        arcs = []
        for j in range(self.stage, g.m):
            u, v = g.edges[j]
            arcs.append((u, v) if self.direction[j] else (v, u))
        return MixedGraph(g.n, frozenset(g.edges[j] for j in self.edges), frozenset(arcs))

    def violations(self) -> list[str]:
        g, i = self.graph, self.stage
        out = []
        if not 0 <= i <= g.m:
            return [f"stage {i} outside 0..{g.m}"]
        if len(self.direction) != g.m:
            out.append("direction has wrong length")
            return out
        if any(j >= i for j in self.edges):
            out.append("undirected edge beyond the current stage")
        if any(self.direction[j] is not None for j in range(i)):
            out.append("decided edge still carries an arc")
        if any(self.direction[j] is None for j in range(i, g.m)):
            out.append("undecided edge has no arc")
        if out:
            return out
        if not is_nbc(g, self.edges):
            out.append("edge set contains a broken circuit")
        if not mixed_is_acyclic(self.to_mixed()):
            out.append("mixed graph has a cycle")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def describe(self) -> str:
        g = self.graph
        parts = []
        for j in range(g.m):
            u, v = g.edges[j]
            if j < self.stage:
                if j in self.edges:
                    parts.append(f"e{j + 1}={u}-{v}")
            else:
                a, b = (u, v) if self.direction[j] else (v, u)
                parts.append(f"a{j + 1}={a}->{b}")
        return " ".join(parts) if parts else "(empty)"


def _normal(g: Graph, normal: Sequence[bool] | None) -> tuple[bool, ...]:
    if normal is None:
        return (True,) * g.m
    normal = tuple(bool(x) for x in normal)
    if len(normal) != g.m:
        raise InvalidInputError(f"normal orientation has {len(normal)} bits for {g.m} edges")
    return normal


def normal_arc(g: Graph, edge_index: int, normal: Sequence[bool] | None = None) -> tuple[int, int]:
    if not 0 <= edge_index < g.m:
        raise InvalidInputError(f"edge index {edge_index} out of range")
    u, v = g.edges[edge_index]
    return (u, v) if _normal(g, normal)[edge_index] else (v, u)


def _require(state: StagedMixed, stage: int):
    if state.stage != stage:
        raise PreconditionError(f"expected a stage-{stage} state, got stage {state.stage}")
    problems = state.violations()
    if problems:
        raise PreconditionError("invalid staged mixed graph: " + "; ".join(problems))


def _with(state: StagedMixed, stage: int, edges, j: int, bit) -> StagedMixed:
    d = list(state.direction)
    d[j] = bit
    return StagedMixed(state.graph, stage, frozenset(edges), tuple(d))


def phi_step_traced(state: StagedMixed, i: int, normal: Sequence[bool] | None = None,
                    check: bool = True) -> tuple[StagedMixed, str]:
    """Apply step ``i`` (1-based) and report which rule decided it."""
    if check:
        _require(state, i - 1)
    j = i - 1
    unoriented = _with(state, i, state.edges | {j}, j, None)
    if state.direction[j] != _normal(state.graph, normal)[j]:
        return _with(state, i, state.edges, j, None), VIOLATED_A
    if not mixed_is_acyclic(unoriented.to_mixed()):
        return _with(state, i, state.edges, j, None), VIOLATED_B
    return unoriented, UNORIENTED


def phi_step(state: StagedMixed, i: int, normal: Sequence[bool] | None = None,
             check: bool = True) -> StagedMixed:
    return phi_step_traced(state, i, normal, check)[0]


def psi_step_traced(state: StagedMixed, i: int, normal: Sequence[bool] | None = None,
                    check: bool = True) -> tuple[StagedMixed, str]:
    """Undo step ``i``: give edge ``e_i`` back an orientation."""
    if check:
        _require(state, i)
    j = i - 1
    norm = _normal(state.graph, normal)[j]
    rest = state.edges - {j}
    if j in state.edges:
        return _with(state, i - 1, rest, j, norm), NORMAL_A
    abnormal = _with(state, i - 1, rest, j, not norm)
    if mixed_is_acyclic(abnormal.to_mixed()):
        return abnormal, ABNORMAL
    return _with(state, i - 1, rest, j, norm), NORMAL_B


def psi_step(state: StagedMixed, i: int, normal: Sequence[bool] | None = None,
             check: bool = True) -> StagedMixed:
    return psi_step_traced(state, i, normal, check)[0]


def initial_state(o: Orientation) -> StagedMixed:
    return StagedMixed(o.graph, 0, frozenset(), tuple(o.direction))


def final_state(g: Graph, s) -> StagedMixed:
    return StagedMixed(g, g.m, g.subset(s), (None,) * g.m)


def phi_trace(g: Graph, o: Orientation, normal: Sequence[bool] | None = None,
              check: bool = False) -> list[tuple[StagedMixed, str | None]]:
    """Every stage from the orientation to the NBC set, with the rule applied."""
    if o.graph != g:
        raise InvalidInputError("orientation belongs to a different graph")
    if not o.is_acyclic():
        raise PreconditionError("phi needs an acyclic orientation")
    state = initial_state(o)
    trace: list[tuple[StagedMixed, str | None]] = [(state, None)]
    for i in range(1, g.m + 1):
        state, label = phi_step_traced(state, i, normal, check)
        trace.append((state, label))
    return trace


def phi(g: Graph, o: Orientation, normal: Sequence[bool] | None = None,
        check: bool = False) -> frozenset[int]:
    """Acyclic orientation -> NBC edge set."""
    return phi_trace(g, o, normal, check)[-1][0].edges


def psi_trace(g: Graph, s, normal: Sequence[bool] | None = None,
              check: bool = False) -> list[tuple[StagedMixed, str | None]]:
    s = g.subset(s)
    if not is_nbc(g, s):
        raise PreconditionError("psi needs an NBC edge set")
    state = final_state(g, s)
    trace: list[tuple[StagedMixed, str | None]] = [(state, None)]
    for i in range(g.m, 0, -1):
        state, label = psi_step_traced(state, i, normal, check)
        trace.append((state, label))
    return trace


def psi(g: Graph, s, normal: Sequence[bool] | None = None, check: bool = False) -> Orientation:
    """NBC edge set -> acyclic orientation; inverse of :func:`phi`."""
    state = psi_trace(g, s, normal, check)[-1][0]
    return Orientation(g, state.direction)


def staged_states(g: Graph, i: int) -> Iterator[StagedMixed]:
    """All members of the stage-``i`` set, by brute force (tests only)."""
    m = g.m
    for mask in range(1 << i):
        edges = frozenset(j for j in range(i) if mask >> j & 1)
        if not is_nbc(g, edges):
            continue
        for bits in product((False, True), repeat=m - i):
            state = StagedMixed(g, i, edges, (None,) * i + bits)
            if mixed_is_acyclic(state.to_mixed()):
                yield state


def color_classes(g: Graph, k: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """``{color: indices of edges with both ends that color}``, in edge order."""
    classes: dict[int, list[int]] = {}
    for j, (u, v) in enumerate(g.edges):
        if k[u] == k[v]:
            classes.setdefault(k[u], []).append(j)
    return {c: tuple(js) for c, js in sorted(classes.items())}


# one color class is a small graph that recurs across many colorings
@lru_cache(maxsize=1 << 16)
def _class_phi(sub: Graph, direction: tuple[bool, ...], normal: tuple[bool, ...]) -> frozenset[int]:
    return phi(sub, Orientation(sub, direction), normal)


@lru_cache(maxsize=1 << 16)
def _class_psi(sub: Graph, s: frozenset[int], normal: tuple[bool, ...]) -> tuple[bool, ...]:
    return psi(sub, s, normal).direction


def Phi(g: Graph, k: Sequence[int], o: Orientation,
        normal: Sequence[bool] | None = None) -> frozenset[int]:
    """Compatible acyclic orientation -> NBC set, one color class at a time."""
    k = check_coloring(g, k)
    norm = _normal(g, normal)
    if not o.is_acyclic():
        raise PreconditionError("Phi needs an acyclic orientation")
    if not is_compatible(o, k):
        raise PreconditionError("orientation is not compatible with the coloring")
    out: set[int] = set()
    for idx in color_classes(g, k).values():
        sub, idx = g.restrict(idx)
        local = _class_phi(sub, tuple(o.direction[j] for j in idx), tuple(norm[j] for j in idx))
        out.update(idx[j] for j in local)
    return frozenset(out)


def Psi(g: Graph, k: Sequence[int], s, normal: Sequence[bool] | None = None) -> Orientation:
    """NBC set with ``k`` constant on its components -> compatible acyclic orientation.

    Edges between color classes point toward the larger color; inside each
    class the orientation comes from :func:`psi` on that class's edges.
    """
    k = check_coloring(g, k)
    s = g.subset(s)
    norm = _normal(g, normal)
    if not is_nbc(g, s):
        raise PreconditionError("Psi needs an NBC edge set")
    if not is_monochromatic_on(g, s, k):
        raise PreconditionError("coloring is not monochromatic on the components of the set")
    direction: list[bool | None] = [None] * g.m
    for j, (u, v) in enumerate(g.edges):
        if k[u] != k[v]:
            direction[j] = k[u] < k[v]
    for idx in color_classes(g, k).values():
        sub, idx = g.restrict(idx)
        local_s = frozenset(pos for pos, j in enumerate(idx) if j in s)
        local = _class_psi(sub, local_s, tuple(norm[j] for j in idx))
        for pos, j in enumerate(idx):
            direction[j] = local[pos]
    return Orientation(g, tuple(direction))
