"""The chromatic polynomial by several independent routes.

``chi_count`` counts proper colorings directly, ``chi_poly_all_subgraphs``
sums over every spanning subgraph, ``chi_poly_nbc`` over NBC subgraphs only,
and ``chi_poly_delcon`` uses deletion-contraction. All arithmetic is exact.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from . import budget as _budget
from .coloring import enumerate_colorings, is_compatible, is_proper
from .errors import InvalidInputError
from .expansion import ExpansionStats, leaves, signed_component_counts
from .graph import Graph, all_orientations


class IntPolynomial:
    """Polynomial in ``t`` with integer coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and equality is coefficient-wise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> IntPolynomial:
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for k, a in terms.items():
            if k < 0:
                raise InvalidInputError("negative exponent")
            c[k] += a
        return cls(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


T = IntPolynomial([0, 1])


def evaluate(p: IntPolynomial, t: int) -> int:
    """Exact value of ``p`` at any integer ``t``, negative included."""
    return p(t)


def chi_count(g: Graph, t: int, budget: int | None = None) -> int:
    """Number of proper ``[t]``-colorings, by enumeration."""
    return sum(1 for k in enumerate_colorings(g, t, budget) if is_proper(g, k))


def chi_poly_count(g: Graph, budget: int | None = None) -> IntPolynomial:
    """Interpolate the counts at ``t = 1..n+1`` (Newton forward differences)."""
    values = [chi_count(g, t, budget) for t in range(1, g.n + 2)]
    result = IntPolynomial([])
    binom = IntPolynomial([1])  # k! * C(t - 1, k)
    fact = 1
    for k in range(g.n + 1):
        if k:
            binom = binom * IntPolynomial([-k, 1])
            fact *= k
        diff = sum((-1) ** (k - j) * comb(k, j) * values[j] for j in range(k + 1))
        # integer coefficients make the k-th difference at 0 a multiple of k!
        result = result + binom * IntPolynomial([diff // fact])
    return result


def chi_poly_all_subgraphs(g: Graph, budget: int | None = None,
                           stats: ExpansionStats | None = None) -> IntPolynomial:
    """Sum of ``(-1)^|S| t^c(S)`` over all ``2^m`` edge subsets."""
    return IntPolynomial.from_terms(signed_component_counts(g, False, budget, stats))


def chi_poly_nbc(g: Graph, budget: int | None = None,
                 stats: ExpansionStats | None = None) -> IntPolynomial:
    """Sum of ``(-1)^|S| t^c(S)`` over NBC subsets only."""
    return IntPolynomial.from_terms(signed_component_counts(g, True, budget, stats))


def nbc_subsets(g: Graph, budget: int | None = None) -> list[frozenset[int]]:
    return [leaf.subset() for leaf in leaves(g, True, budget)]


def nbc_coefficients(g: Graph, budget: int | None = None) -> tuple[int, ...]:
    """``a[k]`` = number of NBC subsets with ``k`` edges, for ``k = 0..n-1``.

    NBC subsets are forests, so ``c(S) = n - |S|`` and the NBC expansion
    reads ``chi(t) = sum (-1)^k a[k] t^(n-k)``. A forest has at most
    ``n - 1`` edges, so ``a[n]`` would always be zero and is left out.
    """
    counts = signed_component_counts(g, True, budget)
    if g.n == 0:
        return (1,)
    a = [0] * g.n
    for c, signed in counts.items():
        k = g.n - c
        a[k] = signed if k % 2 == 0 else -signed
    return tuple(a)


def is_log_concave(a: Sequence[int]) -> bool:
    """``a[k]^2 >= a[k-1] a[k+1]`` at every interior index."""
    return all(a[k] * a[k] >= a[k - 1] * a[k + 1] for k in range(1, len(a) - 1))


def poly_from_nbc_coefficients(n: int, a: Sequence[int]) -> IntPolynomial:
    return IntPolynomial.from_terms({n - k: (-1) ** k * x for k, x in enumerate(a)})


def _contract(n: int, edges: frozenset, u: int, v: int) -> frozenset:
    # merge v into u, drop v from the labels, discard the loop and parallels
    def relabel(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    out = set()
    for a, b in edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            out.add((min(a, b), max(a, b)))
    return frozenset(out)


def chi_poly_delcon(g: Graph, budget: int | None = None) -> IntPolynomial:
    """Deletion-contraction ``chi(G) = chi(G - e) - chi(G / e)``, memoized.

    Contraction merges the endpoints and keeps the graph simple, which does
    not change the number of proper colorings.
    """
    counter = _budget.Counter(_budget.resolve(budget), "deletion-contraction calls")
    memo: dict[tuple[int, frozenset], IntPolynomial] = {}

    def rec(n: int, edges: frozenset) -> IntPolynomial:
        key = (n, edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        counter.tick()
        if not edges:
            result = IntPolynomial.monomial(n)
        else:
            e = max(edges)
            result = rec(n, edges - {e}) - rec(n - 1, _contract(n, edges - {e}, *e))
        memo[key] = result
        return result

    return rec(g.n, frozenset(g.edges))


def acyclic_orientations(g: Graph, budget: int | None = None):
    _budget.check(2 ** g.m, _budget.resolve(budget), f"2^{g.m} orientations")
    return (o for o in all_orientations(g) if o.is_acyclic())


def acyclic_orientation_count(g: Graph, budget: int | None = None) -> int:
    return sum(1 for _ in acyclic_orientations(g, budget))


def compatible_pair_count(g: Graph, t: int, budget: int | None = None) -> int:
    """Pairs (acyclic orientation, compatible ``[t]``-coloring), by brute force."""
    colorings = list(enumerate_colorings(g, t, budget))
    _budget.check(2 ** g.m * len(colorings), _budget.resolve(budget), "orientation-coloring pairs")
    return sum(1 for o in acyclic_orientations(g, budget) for k in colorings if is_compatible(o, k))


def tree_polynomial(n: int) -> IntPolynomial:
    """``t (t - 1)^(n - 1)``, shared by every tree on ``n`` vertices."""
    return T * (T - IntPolynomial([1])) ** (n - 1)
