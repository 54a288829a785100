"""Graphs with a fixed edge order, spanning subgraphs, and mixed graphs.

Vertices are the integers ``0..n-1``. The position of an edge in
``Graph.edges`` is its rank in the total edge order, so ``edges[0]`` is the
first edge. Spanning subgraphs are identified with sets of edge indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidInputError, PreconditionError

Edge = tuple[int, int]
EdgeSubset = frozenset[int]
Partition = tuple[int, ...]


class DisjointSet:
    """Union-find over ``0..n-1`` with union by size and path halving."""

    __slots__ = ("parent", "size", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the blocks of ``a`` and ``b``; False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True

    def blocks(self) -> tuple[frozenset[int], ...]:
        groups: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            groups.setdefault(self.find(v), []).append(v)
        # vertices were appended in increasing order, so block[0] is the min
        return tuple(frozenset(b) for b in sorted(groups.values(), key=lambda b: b[0]))

    def block_sizes(self) -> Partition:
        return tuple(sorted((self.size[r] for r in range(len(self.parent)) if self.parent[r] == r), reverse=True))


@dataclass(frozen=True)
class Graph:
    """Simple loop-free graph whose edge sequence fixes the edge order.

    Edges are stored as ``(min, max)`` pairs; the sequence order is kept
    exactly as given. Use :meth:`from_edges` to get the default
    lexicographic order from an unordered edge collection.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidInputError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        normalized = []
        seen = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInputError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise InvalidInputError(f"loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise InvalidInputError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph with edges sorted lexicographically by (min, max)."""
        pairs = sorted((min(u, v), max(u, v)) for u, v in edges)
        return cls(n, tuple(pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``adjacency[v]`` lists ``(neighbor, edge index)`` pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def subset(self, indices: Iterable[int]) -> EdgeSubset:
        """Validate ``indices`` as an edge subset of this graph."""
        s = frozenset(indices)
        for i in s:
            if not isinstance(i, int) or not 0 <= i < self.m:
                raise InvalidInputError(f"edge index {i!r} out of range for {self.m} edges")
        return s

    def restrict(self, indices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Spanning subgraph on the given edges, keeping the induced order.

        Returns the subgraph and the map from its edge indices to ours.
        """
        kept = tuple(sorted(self.subset(indices)))
        return Graph(self.n, tuple(self.edges[i] for i in kept)), kept


def _forest_of(g: Graph, s: EdgeSubset) -> DisjointSet:
    ds = DisjointSet(g.n)
    for i in s:
        u, v = g.edges[i]
        ds.union(u, v)
    return ds


def components(g: Graph, s: Iterable[int]) -> tuple[frozenset[int], ...]:
    """Vertex sets of the components of the spanning subgraph ``(V, s)``.

    Blocks are ordered by their smallest vertex.
    """
    return _forest_of(g, g.subset(s)).blocks()


def component_count(g: Graph, s: Iterable[int]) -> int:
    return _forest_of(g, g.subset(s)).count


def lambda_of(g: Graph, s: Iterable[int]) -> Partition:
    """Component sizes of ``(V, s)`` in weakly decreasing order."""
    return _forest_of(g, g.subset(s)).block_sizes()


def is_forest(g: Graph, s: Iterable[int]) -> bool:
    ds = DisjointSet(g.n)
    for i in g.subset(s):
        u, v = g.edges[i]
        if not ds.union(u, v):
            return False
    return True


def is_nbc(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` contains no broken circuit.

    ``s`` fails exactly when some edge ``uv`` has its endpoints already joined
    by the members of ``s`` that come strictly before it: that path is a
    broken circuit (and if ``uv`` is itself in ``s`` it also closes a cycle).
    """
    s = g.subset(s)
    ds = DisjointSet(g.n)
    for i, (u, v) in enumerate(g.edges):
        if ds.find(u) == ds.find(v):
            return False
        if i in s:
            ds.union(u, v)
    return True


def cycles(g: Graph) -> list[EdgeSubset]:
    """Edge sets of all cycles of ``g``, sorted by their index tuples.

    Exponential depth-first search; meant for small graphs and tests.
    """
    found: set[EdgeSubset] = set()
    adj = g.adjacency
    for root in range(g.n):
        # each cycle is rooted at its smallest vertex
        stack = [(root, (root,), ())]
        while stack:
            v, path, used = stack.pop()
            for w, i in adj[v]:
                if w == root and len(path) >= 3:
                    found.add(frozenset(used + (i,)))
                elif w > root and w not in path:
                    stack.append((w, path + (w,), used + (i,)))
    return sorted(found, key=lambda c: tuple(sorted(c)))


def broken_circuits(g: Graph) -> list[EdgeSubset]:
    """All sets ``C - max C`` over cycles ``C``, deduplicated and sorted."""
    result = {c - {max(c)} for c in cycles(g)}
    return sorted(result, key=lambda b: tuple(sorted(b)))


def contains_broken_circuit(g: Graph, s: Iterable[int]) -> bool:
    """Definitional NBC test by cycle enumeration (slow reference)."""
    s = g.subset(s)
    return any(b <= s for b in broken_circuits(g))


@dataclass(frozen=True)
class MixedGraph:
    """Vertices ``0..n-1`` with undirected ``edges`` and directed ``arcs``.

    Edges are stored as ``(min, max)``; an arc ``(u, v)`` points from u to v.
    A vertex pair may carry both an edge and an arc, or two opposite arcs;
    such a pair already forms a two-vertex cycle.
    """

    n: int
    edges: frozenset[Edge] = frozenset()
    arcs: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError("vertex count must be nonnegative")
        edges = set()
        for u, v in self.edges:
            self._check_pair(u, v)
            edges.add((min(u, v), max(u, v)))
        for u, v in self.arcs:
            self._check_pair(u, v)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "arcs", frozenset((u, v) for u, v in self.arcs))

    def _check_pair(self, u, v):
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidInputError(f"pair {(u, v)} has an endpoint outside 0..{self.n - 1}")
        if u == v:
            raise InvalidInputError(f"loop at vertex {u}")


def mixed_is_acyclic(m: MixedGraph) -> bool:
    """True iff ``m`` contains no cycle.

    A mixed graph is acyclic exactly when its edges form a forest and no
    closed walk traverses an arc. The second condition is checked on the
    digraph obtained by contracting each edge component to a point: an arc
    inside one component is a loop there, otherwise we look for a directed
    cycle.
    """
    ds = DisjointSet(m.n)
    for u, v in m.edges:
        if not ds.union(u, v):
            return False
    succ: dict[int, list[int]] = {}
    indeg: dict[int, int] = {}
    for u, v in m.arcs:
        ru, rv = ds.find(u), ds.find(v)
        if ru == rv:
            return False
        succ.setdefault(ru, []).append(rv)
        indeg[rv] = indeg.get(rv, 0) + 1
        indeg.setdefault(ru, 0)
    ready = [x for x, d in indeg.items() if d == 0]
    removed = 0
    while ready:
        x = ready.pop()
        removed += 1
        for y in succ.get(x, ()):
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return removed == len(indeg)


@dataclass(frozen=True)
class Walk:
    """A walk ``v0, c1, v1, ..., ck, vk`` in a mixed graph.

    ``arcs[i]`` tells whether step ``i`` (from ``vertices[i]`` to
    ``vertices[i+1]``) uses the arc ``vertices[i] -> vertices[i+1]`` rather
    than the undirected edge between them.
    """

    vertices: tuple[int, ...]
    arcs: tuple[bool, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arcs", tuple(bool(a) for a in self.arcs))
        if len(self.vertices) == 0 or len(self.arcs) != len(self.vertices) - 1:
            raise InvalidInputError("a walk needs k+1 vertices and k step kinds")

    def __len__(self):
        return len(self.arcs)

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def elements(self) -> list[tuple[str, Edge]]:
        out = []
        for i, is_arc in enumerate(self.arcs):
            u, v = self.vertices[i], self.vertices[i + 1]
            out.append(("arc", (u, v)) if is_arc else ("edge", (min(u, v), max(u, v))))
        return out

    def rotate(self, start: int) -> Walk:
        """The closed walk read from position ``start``."""
        k = len(self)
        verts = self.vertices[start:k] + self.vertices[:start + 1]
        return Walk(verts, self.arcs[start:] + self.arcs[:start])

    def segment(self, i: int, j: int) -> Walk:
        return Walk(self.vertices[i:j + 1], self.arcs[i:j])


def is_walk_in(m: MixedGraph, walk: Walk) -> bool:
    for kind, pair in walk.elements():
        if kind == "arc" and pair not in m.arcs:
            return False
        if kind == "edge" and pair not in m.edges:
            return False
    return all(0 <= v < m.n for v in walk.vertices)


def is_cycle(m: MixedGraph, walk: Walk) -> bool:
    """Closed path with more than one vertex, contained in ``m``."""
    if not walk.closed or len(walk) < 2 or not is_walk_in(m, walk):
        return False
    inner = walk.vertices[:-1]
    if len(set(inner)) != len(inner):
        return False
    elements = walk.elements()
    return len(set(elements)) == len(elements)


def extract_cycle(m: MixedGraph, walk: Walk) -> Walk:
    """Shorten a closed walk that traverses an arc down to a cycle of ``m``.

    While the walk repeats a vertex it is split there into two shorter
    closed walks; together they traverse everything the original did, so at
    least one still uses an arc, and that one is kept.
    """
    if not walk.closed or not is_walk_in(m, walk):
        raise PreconditionError("extract_cycle needs a closed walk contained in the mixed graph")
    if not any(walk.arcs):
        raise PreconditionError("the walk must traverse at least one arc")
    while not is_cycle(m, walk):
        k = len(walk)
        split = _repeated_pair(walk.vertices, k)
        if split is None:
            # no repeated vertex yet not a cycle: impossible once an arc is used
            raise AssertionError(f"cannot shorten walk {walk}")
        i, j = split
        inner = walk.segment(i, j)
        outer = walk.rotate(j).segment(0, k - (j - i))
        walk = inner if any(inner.arcs) else outer
    return walk


def _repeated_pair(vertices, k):
    first_seen: dict[int, int] = {}
    for j in range(k + 1):
        v = vertices[j]
        if v in first_seen and (first_seen[v], j) != (0, k):
            return first_seen[v], j
        first_seen.setdefault(v, j)
    return None


@dataclass(frozen=True)
class Orientation:
    """One direction bit per edge; True means lower endpoint -> higher."""

    graph: Graph
    direction: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "direction", tuple(bool(d) for d in self.direction))
        if len(self.direction) != self.graph.m:
            raise InvalidInputError(
                f"orientation has {len(self.direction)} bits for {self.graph.m} edges")

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[Edge]) -> Orientation:
        bits: list[bool | None] = [None] * g.m
        for u, v in arcs:
            i = g.edge_index.get((min(u, v), max(u, v)))
            if i is None:
                raise InvalidInputError(f"arc {(u, v)} is not an edge of the graph")
            bits[i] = u < v
        if any(b is None for b in bits):
            raise InvalidInputError("every edge needs exactly one arc")
        return cls(g, tuple(bits))

    def arc(self, i: int) -> Edge:
        u, v = self.graph.edges[i]
        return (u, v) if self.direction[i] else (v, u)

    @cached_property
    def arcs(self) -> tuple[Edge, ...]:
        return tuple(self.arc(i) for i in range(self.graph.m))

    def to_mixed(self) -> MixedGraph:
        return MixedGraph(self.graph.n, frozenset(), frozenset(self.arcs))

    @cached_property
    def acyclic(self) -> bool:
        return mixed_is_acyclic(self.to_mixed())

    def is_acyclic(self) -> bool:
        return self.acyclic


def all_orientations(g: Graph):
    for bits in _bit_tuples(g.m):
        yield Orientation(g, bits)


def _bit_tuples(m):
    for mask in range(1 << m):
        yield tuple(bool(mask >> i & 1) for i in range(m))


def all_subsets(g: Graph):
    """Every edge subset, in order of the bitmask they encode."""
    m = g.m
    for mask in range(1 << m):
        yield frozenset(i for i in range(m) if mask >> i & 1)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
