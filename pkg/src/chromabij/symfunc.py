"""Symmetric functions in the power-sum basis and the chromatic symmetric function.

A :class:`PSymFunc` is a finite integer combination of power sums
``p_lambda``. Monomial expansions (:class:`MonomialMap`) only exist after
truncating to finitely many variables ``x_1..x_mu`` and are used as oracles.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from math import factorial
from typing import Iterable, Mapping

from . import budget as _budget
from .coloring import enumerate_colorings, is_compatible, is_monochromatic_on, is_proper
from .errors import InvalidInputError
from .expansion import ExpansionStats, leaves
from .graph import Graph
from .poly import IntPolynomial, acyclic_orientations

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Canonical (weakly decreasing) form of ``parts``."""
    parts = tuple(sorted(parts, reverse=True))
    if any(not isinstance(p, int) or p < 1 for p in parts):
        raise InvalidInputError(f"partition parts must be positive integers: {parts}")
    return parts


def partition_key(lam: Partition):
    """Sort key: by size, then reverse-lexicographic within a size."""
    return (sum(lam), tuple(-x for x in lam))


class PSymFunc:
    """Integer combination of power sums ``p_lambda``.

    Stored as a map from canonical partitions to nonzero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        acc: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            lam = partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self.terms = {lam: c for lam, c in acc.items() if c}

    def __eq__(self, other):
        if isinstance(other, PSymFunc):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: PSymFunc) -> PSymFunc:
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return PSymFunc(out)

    def __neg__(self) -> PSymFunc:
        return self.scale(-1)

    def __sub__(self, other: PSymFunc) -> PSymFunc:
        return self + (-other)

    def __mul__(self, other: PSymFunc) -> PSymFunc:
        # p_a * p_b = p_(a union b); only used to assemble p_lambda from p_k
        out: dict[Partition, int] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                lam = partition(a + b)
                out[lam] = out.get(lam, 0) + x * y
        return PSymFunc(out)

    def scale(self, c: int) -> PSymFunc:
        return PSymFunc({lam: c * x for lam, x in self.terms.items()})

    def items(self):
        """Terms in canonical serialization order."""
        return sorted(self.terms.items(), key=lambda kv: partition_key(kv[0]))

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def __repr__(self):
        inner = ", ".join(f"{lam}: {c}" for lam, c in self.items())
        return f"PSymFunc({{{inner}}})"


def p_term(lam: Iterable[int]) -> PSymFunc:
    """The basis element ``p_lambda``; the empty partition gives the unit."""
    return PSymFunc({partition(lam): 1})


def _signed_shapes(g: Graph, nbc_only: bool, budget, stats) -> PSymFunc:
    acc: dict[Partition, int] = {}
    for leaf in leaves(g, nbc_only, budget, stats):
        lam = leaf.shape()
        acc[lam] = acc.get(lam, 0) + (-1 if leaf.size & 1 else 1)
    return PSymFunc(acc)


def X_all_subgraphs(g: Graph, budget: int | None = None,
                    stats: ExpansionStats | None = None) -> PSymFunc:
    """``sum over all S of (-1)^|S| p_lambda(S)``."""
    return _signed_shapes(g, False, budget, stats)


def X_nbc(g: Graph, budget: int | None = None,
          stats: ExpansionStats | None = None) -> PSymFunc:
    """``sum over NBC S of (-1)^|S| p_lambda(S)``."""
    return _signed_shapes(g, True, budget, stats)


def omega(f: PSymFunc) -> PSymFunc:
    """``p_lambda -> (-1)^(n - l) p_lambda`` for ``lambda`` of size n, length l."""
    return PSymFunc({lam: (-1) ** (sum(lam) - len(lam)) * c for lam, c in f.terms.items()})


def specialize(f: PSymFunc) -> IntPolynomial:
    """Set ``x_1 = ... = x_t = 1`` and the rest to 0: ``p_lambda -> t^l``."""
    acc: dict[int, int] = {}
    for lam, c in f.terms.items():
        acc[len(lam)] = acc.get(len(lam), 0) + c
    return IntPolynomial.from_terms(acc)


class MonomialMap:
    """Polynomial in ``x_1..x_mu`` keyed by exponent vectors."""

    __slots__ = ("mu", "terms")

    def __init__(self, mu: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if mu < 1:
            raise InvalidInputError("need at least one variable")
        self.mu = mu
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != mu:
                raise InvalidInputError(f"exponent vector {exps} has wrong length for mu={mu}")
            clean[exps] = clean.get(exps, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    def __eq__(self, other):
        if isinstance(other, MonomialMap):
            return self.mu == other.mu and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: MonomialMap) -> MonomialMap:
        if other.mu != self.mu:
            raise InvalidInputError("variable counts differ")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MonomialMap(self.mu, out)

    def __mul__(self, other: MonomialMap) -> MonomialMap:
        if other.mu != self.mu:
            raise InvalidInputError("variable counts differ")
        out: dict[tuple[int, ...], int] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                e = tuple(i + j for i, j in zip(a, b))
                out[e] = out.get(e, 0) + x * y
        return MonomialMap(self.mu, out)

    def is_symmetric(self) -> bool:
        """Coefficients depend only on the multiset of exponents."""
        seen: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            key = tuple(sorted(e))
            if seen.setdefault(key, c) != c:
                return False
        # every rearrangement of a supported vector must itself be supported
        by_key: dict[tuple[int, ...], int] = {}
        for e in self.terms:
            key = tuple(sorted(e))
            by_key[key] = by_key.get(key, 0) + 1
        for key, count in by_key.items():
            arrangements = factorial(len(key))
            for mult in Counter(key).values():
                arrangements //= factorial(mult)
            if count != arrangements:
                return False
        return True

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def items(self):
        return sorted(self.terms.items(), reverse=True)

    def __repr__(self):
        return f"MonomialMap({self.mu}, {dict(self.items())})"


def power_sum(k: int, mu: int) -> MonomialMap:
    """``p_k = x_1^k + ... + x_mu^k``."""
    return MonomialMap(mu, {tuple(k if j == i else 0 for j in range(mu)): 1 for i in range(mu)})


def expand_monomials(f: PSymFunc, mu: int, budget: int | None = None) -> MonomialMap:
    """Expand ``f`` in the variables ``x_1..x_mu``."""
    limit = _budget.resolve(budget)
    _budget.check(sum(mu ** len(lam) for lam in f.terms), limit, "monomial expansion terms")
    total = MonomialMap(mu)
    for lam, c in f.terms.items():
        term = MonomialMap(mu, {(0,) * mu: c})
        for part in lam:
            term = term * power_sum(part, mu)
        total = total + term
    return total


def _weight(k, mu) -> tuple[int, ...]:
    exps = [0] * mu
    for c in k:
        exps[c - 1] += 1
    return tuple(exps)


def X_bruteforce(g: Graph, mu: int, budget: int | None = None) -> MonomialMap:
    """Sum of ``x^kappa`` over proper colorings ``V -> [mu]``."""
    acc: dict[tuple[int, ...], int] = {}
    for k in enumerate_colorings(g, mu, budget):
        if is_proper(g, k):
            w = _weight(k, mu)
            acc[w] = acc.get(w, 0) + 1
    return MonomialMap(mu, acc)


def compat_generating(g: Graph, mu: int, budget: int | None = None) -> MonomialMap:
    """Sum of ``x^kappa`` over acyclic ``O`` and compatible ``kappa: V -> [mu]``."""
    colorings = list(enumerate_colorings(g, mu, budget))
    _budget.check(2 ** g.m * len(colorings), _budget.resolve(budget), "orientation-coloring pairs")
    acc: dict[tuple[int, ...], int] = {}
    for o in acyclic_orientations(g, budget):
        for k in colorings:
            if is_compatible(o, k):
                w = _weight(k, mu)
                acc[w] = acc.get(w, 0) + 1
    return MonomialMap(mu, acc)


def monochromatic_weight_sum(g: Graph, s, mu: int) -> MonomialMap:
    """Sum of ``x^kappa`` over ``kappa: V -> [mu]`` constant on components of ``s``."""
    acc: dict[tuple[int, ...], int] = {}
    for k in product(range(1, mu + 1), repeat=g.n):
        if is_monochromatic_on(g, s, k):
            w = _weight(k, mu)
            acc[w] = acc.get(w, 0) + 1
    return MonomialMap(mu, acc)
