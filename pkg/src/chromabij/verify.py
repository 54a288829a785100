"""Small-graph enumeration, fixture graphs, and the theorem sweep.

:func:`check_theorems` runs every identity the package implements against
one graph and records a pass/fail/skipped line per identity. The sweep is
brute force on purpose and only meant for graphs with a handful of
vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator

from . import budget as _budget
from .bijections import Phi, Psi, phi, phi_step, psi, psi_step, staged_states
from .coloring import enumerate_colorings, is_monochromatic_on
from .errors import BudgetExceededError, InvalidInputError
from .graph import Graph, Orientation, is_forest
from .involution import signed_weight_sum, verify_involution
from .poly import (
    IntPolynomial,
    acyclic_orientations,
    chi_count,
    chi_poly_count,
    chi_poly_all_subgraphs,
    chi_poly_delcon,
    chi_poly_nbc,
    compatible_pair_count,
    is_log_concave,
    nbc_coefficients,
    nbc_subsets,
    poly_from_nbc_coefficients,
    tree_polynomial,
)
from .symfunc import (
    X_all_subgraphs,
    X_bruteforce,
    X_nbc,
    compat_generating,
    expand_monomials,
    omega,
    specialize,
)

GRAPH_CAP = 7
TREE_CAP = 9

# u=0, v=1, w=2, x=3 with e1=uw, e2=uv, e3=vw, e4=vx
FIG1 = Graph(4, ((0, 2), (0, 1), (1, 2), (1, 3)))

NAMED_GRAPHS = {
    "fig1": FIG1,
    # two triangles sharing vertex 0
    "butterfly": Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
    # 4-cycle 0-1-2-3 with chord 1-3 and a pendant vertex 4 on 2
    "kite": Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3), (2, 4)]),
    # triangle 0-1-2 with one pendant on each corner
    "net": Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
    # triangle 0-1-2; at 0 a pendant edge 0-3 and a pendant path 0-4-5
    "x169": Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (4, 5)]),
}


def named_graph(name: str) -> Graph:
    try:
        return NAMED_GRAPHS[name]
    except KeyError:
        raise InvalidInputError(
            f"unknown graph {name!r}; known: {', '.join(sorted(NAMED_GRAPHS))}") from None


def enumerate_graphs(n: int, cap: int = GRAPH_CAP) -> Iterator[Graph]:
    """All ``2^C(n,2)`` labeled simple graphs on ``n`` vertices."""
    if n < 0 or n > cap:
        raise BudgetExceededError(f"graph enumeration capped at n={cap}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_graph_with_edges(n: int, m: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, rng.sample(list(combinations(range(n), 2)), m))


def prufer_edges(seq, n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree with Pruefer sequence ``seq``."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return edges


def _tree_edge_lists(n: int, cap: int):
    if n < 1 or n > cap:
        raise BudgetExceededError(f"tree enumeration capped at n={cap}")
    if n == 1:
        yield []
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_edges(seq, n)


def enumerate_trees(n: int, cap: int = TREE_CAP) -> Iterator[Graph]:
    """All ``n^(n-2)`` labeled trees on ``n`` vertices (via Pruefer codes)."""
    for edges in _tree_edge_lists(n, cap):
        yield Graph.from_edges(n, edges)


def _adjacency(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centers(adj) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_codes(adj, root) -> dict[int, str]:
    """AHU code of every subtree when the tree hangs from ``root``."""
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    codes: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(codes[w] for w in adj[v] if parent.get(w) == v and w != root)
        codes[v] = "(" + "".join(kids) + ")"
    return codes


def _code_from_adj(adj) -> str:
    return min(_rooted_codes(adj, c)[c] for c in _centers(adj))


def tree_code(g: Graph) -> str:
    """Canonical string of a tree: the smallest AHU code over its centers."""
    if g.n == 0:
        return ""
    if g.m != g.n - 1 or not is_forest(g, range(g.m)):
        raise InvalidInputError("tree_code needs a tree")
    return _code_from_adj(_adjacency(g.n, g.edges))


def tree_isomorphism(t1: Graph, t2: Graph) -> dict[int, int] | None:
    """An explicit vertex bijection ``t1 -> t2`` preserving edges, or None."""
    if t1.n != t2.n or t1.m != t2.m:
        return None
    if t1.n == 0:
        return {}
    a1, a2 = _adjacency(t1.n, t1.edges), _adjacency(t2.n, t2.edges)
    c1 = _centers(a1)[0]
    codes1 = _rooted_codes(a1, c1)
    for c2 in _centers(a2):
        codes2 = _rooted_codes(a2, c2)
        if codes2[c2] != codes1[c1]:
            continue
        mapping = {c1: c2}
        stack = [(c1, c2, -1, -1)]
        while stack:
            v1, v2, p1, p2 = stack.pop()
            kids1 = sorted((w for w in a1[v1] if w != p1), key=lambda w: codes1[w])
            kids2 = sorted((w for w in a2[v2] if w != p2), key=lambda w: codes2[w])
            for w1, w2 in zip(kids1, kids2):
                mapping[w1] = w2
                stack.append((w1, w2, v1, v2))
        image = {(min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in t1.edges}
        if image == set(t2.edges):
            return mapping
    return None


@dataclass
class TreeSweepReport:
    n: int
    labeled_trees: int = 0
    classes: int = 0
    collisions: list[tuple[str, str]] = field(default_factory=list)
    representatives: dict[str, Graph] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.collisions

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "labeled_trees": self.labeled_trees,
            "classes": self.classes,
            "collisions": [list(c) for c in self.collisions],
            "passed": self.passed,
        }


def tree_conjecture_sweep(n: int, cap: int = TREE_CAP) -> TreeSweepReport:
    """Group labeled trees by isomorphism class and compare their X.

    Every labeled tree is canonized; one representative per class gets its
    chromatic symmetric function, and any two classes with equal functions
    are reported as a collision.
    """
    report = TreeSweepReport(n)
    reps: dict[str, list[tuple[int, int]]] = {}
    for edges in _tree_edge_lists(n, cap):
        report.labeled_trees += 1
        code = _code_from_adj(_adjacency(n, edges)) if n > 0 else ""
        if code not in reps:
            reps[code] = edges
    report.classes = len(reps)
    by_x: dict[tuple, str] = {}
    for code in sorted(reps):
        g = Graph.from_edges(n, reps[code])
        report.representatives[code] = g
        key = tuple(X_nbc(g).items())
        if key in by_x:
            report.collisions.append((by_x[key], code))
        else:
            by_x[key] = code
    return report


PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Check:
    name: str
    status: str
    details: str = ""


@dataclass
class VerificationReport:
    graph_id: str
    checks: list[Check] = field(default_factory=list)

    @property
    def totals(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def status(self, name: str) -> str:
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "checks": [{"name": c.name, "status": c.status, "details": c.details} for c in self.checks],
            "totals": self.totals,
            "passed": self.passed,
        }


def graph_id(g: Graph) -> str:
    return f"n={g.n} edges=" + ",".join(f"{u}-{v}" for u, v in g.edges)


def check_theorems(g: Graph, t_max: int = 3, mu_max: int = 3,
                   budget: int | None = None) -> VerificationReport:
    report = VerificationReport(graph_id(g))
    limit = _budget.resolve(budget)

    def run(name: str, fn: Callable[[], tuple[bool, str]]):
        try:
            ok, details = fn()
        except BudgetExceededError as exc:
            report.checks.append(Check(name, SKIPPED, str(exc)))
            return
        report.checks.append(Check(name, PASS if ok else FAIL, details))

    cache: dict[str, object] = {}

    def chi() -> IntPolynomial:
        if "chi" not in cache:
            cache["chi"] = chi_poly_nbc(g, limit)
        return cache["chi"]

    def X():
        if "X" not in cache:
            cache["X"] = X_nbc(g, limit)
        return cache["X"]

    def acyclic() -> list[Orientation]:
        if "ao" not in cache:
            cache["ao"] = list(acyclic_orientations(g, limit))
        return cache["ao"]

    def four_way():
        p_all, p_nbc, p_dc = chi_poly_all_subgraphs(g, limit), chi(), chi_poly_delcon(g, limit)
        bad = [t for t in range(1, t_max + 1) if chi_count(g, t, limit) != p_all(t)]
        ok = p_all == p_nbc == p_dc == chi_poly_count(g, limit) and not bad
        return ok, f"chi = {p_nbc}" + (f"; count mismatch at t={bad}" if bad else "")

    def x_equal():
        return X_all_subgraphs(g, limit) == X(), f"{len(X().terms)} p-terms"

    def spec():
        return specialize(X()) == chi() == specialize(X_all_subgraphs(g, limit)), ""

    def involution():
        for t in range(1, t_max + 1):
            r = verify_involution(g, t, limit)
            if not r.passed:
                return False, f"t={t}: fix={r.fixed_points} chi={r.chi} failures={r.failures[:3]}"
        return True, f"t<={t_max}"

    def monomial_oracle():
        f = X()
        for mu in range(1, mu_max + 1):
            brute = X_bruteforce(g, mu, limit)
            if expand_monomials(f, mu, limit) != brute:
                return False, f"mu={mu}: expansion differs from brute force"
            if not brute.is_symmetric() or brute.total_degrees() - {g.n}:
                return False, f"mu={mu}: brute-force map not symmetric/homogeneous"
            if signed_weight_sum(g, mu, limit) != brute:
                return False, f"mu={mu}: signed pair sum differs"
        return True, f"mu<={mu_max}"

    def reciprocity_one():
        count = len(acyclic())
        expected = (-1) ** g.n * chi()(-1)
        return count == expected, f"{count} acyclic orientations, (-1)^n chi(-1) = {expected}"

    def reciprocity_t():
        for t in range(1, t_max + 1):
            count = compatible_pair_count(g, t, limit)
            expected = (-1) ** g.n * chi()(-t)
            nbc_side = sum(t ** (g.n - len(s)) for s in nbc_subsets(g, limit))
            if not count == expected == nbc_side:
                return False, f"t={t}: pairs={count} (-1)^n chi(-t)={expected} nbc-sum={nbc_side}"
        return True, f"t<={t_max}"

    def phi_psi():
        images = set()
        for o in acyclic():
            s = phi(g, o)
            if psi(g, s) != o:
                return False, f"psi(phi(o)) != o for {o.direction}"
            images.add(s)
        nbc = set(nbc_subsets(g, limit))
        if images != nbc:
            return False, "phi is not onto the NBC sets"
        if any(phi(g, psi(g, s)) != s for s in nbc):
            return False, "phi(psi(s)) != s"
        return True, f"{len(nbc)} NBC sets"

    def staged():
        for i in range(1, g.m + 1):
            for state in staged_states(g, i - 1):
                nxt = phi_step(state, i, check=False)
                if not nxt.is_valid() or psi_step(nxt, i, check=False) != state:
                    return False, f"step {i} fails on {state.describe()}"
            for state in staged_states(g, i):
                prev = psi_step(state, i, check=False)
                if not prev.is_valid() or phi_step(prev, i, check=False) != state:
                    return False, f"inverse step {i} fails on {state.describe()}"
        return True, ""

    def phi_psi_colored():
        _budget.check(t_max ** g.n * 2 ** g.m, limit, "colorings x orientations")
        nbc = nbc_subsets(g, limit)
        for k in enumerate_colorings(g, t_max, limit):
            orients = [o for o in acyclic() if all(k[u] <= k[v] for u, v in o.arcs)]
            sets = {s for s in nbc if is_monochromatic_on(g, s, k)}
            images = set()
            for o in orients:
                s = Phi(g, k, o)
                if Psi(g, k, s) != o:
                    return False, f"Psi(Phi(o)) != o for kappa={k}"
                images.add(s)
            # Psi o Phi = id plus Phi onto the sets already forces Phi o Psi = id
            if images != sets:
                return False, f"Phi not onto the NBC sets for kappa={k}"
        return True, f"kappa in [{t_max}]^V"

    def omega_reciprocity():
        w = omega(X())
        for mu in range(1, mu_max + 1):
            if compat_generating(g, mu, limit) != expand_monomials(w, mu, limit):
                return False, f"mu={mu}"
        return True, f"mu<={mu_max}"

    def coefficients():
        a = nbc_coefficients(g, limit)
        ok = poly_from_nbc_coefficients(g.n, a) == chi() and is_log_concave(a)
        return ok, f"a = {list(a)}"

    def tree_formula():
        if not (g.n >= 1 and g.m == g.n - 1 and is_forest(g, range(g.m))):
            raise _NotApplicable
        return chi() == tree_polynomial(g.n), ""

    checks = [
        ("chi-four-way", four_way),
        ("X-all-equals-nbc", x_equal),
        ("specialize-X", spec),
        ("involution", involution),
        ("X-monomial-oracle", monomial_oracle),
        ("acyclic-reciprocity", reciprocity_one),
        ("compatible-reciprocity", reciprocity_t),
        ("phi-psi", phi_psi),
        ("phi-psi-steps", staged),
        ("Phi-Psi", phi_psi_colored),
        ("omega-reciprocity", omega_reciprocity),
        ("nbc-coefficients", coefficients),
        ("tree-formula", tree_formula),
    ]
    for name, fn in checks:
        try:
            run(name, fn)
        except _NotApplicable:
            report.checks.append(Check(name, SKIPPED, "not a tree"))
    return report


class _NotApplicable(Exception):
    pass


def compare_X(g1: Graph, g2: Graph) -> bool:
    return X_nbc(g1) == X_nbc(g2)
