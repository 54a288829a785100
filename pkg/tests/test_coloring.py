import random
from itertools import permutations

import pytest

from chromabij.coloring import (
    count_monochromatic_colorings,
    enumerate_colorings,
    is_compatible,
    is_monochromatic_on,
    is_proper,
    monochromatic_edges,
)
from chromabij.errors import BudgetExceededError, InvalidInputError
from chromabij.graph import Graph, Orientation, all_orientations, all_subsets

from conftest import E2, E3, U, V, W, X, graphs_upto, k2


def test_is_proper_fig1(fig1):
    assert is_proper(fig1, (3, 4, 1, 3))
    assert not is_proper(fig1, (3, 3, 1, 4))


def test_edgeless_always_proper():
    g = Graph(3)
    assert all(is_proper(g, k) for k in enumerate_colorings(g, 2))


def test_coloring_validation(fig1):
    with pytest.raises(InvalidInputError):
        is_proper(fig1, (1, 2, 3))
    with pytest.raises(InvalidInputError):
        is_proper(fig1, (0, 1, 2, 3))


def test_monochromatic_on_examples(fig1):
    assert is_monochromatic_on(fig1, set(), (1, 2, 3, 4))
    assert is_monochromatic_on(fig1, {E2, E3}, (3, 3, 3, 1))
    assert not is_monochromatic_on(fig1, {E2}, (3, 4, 1, 3))


def test_monochromatic_edges(fig1):
    assert monochromatic_edges(fig1, (3, 3, 1, 4)) == [E2]


def test_count_monochromatic_examples(fig1):
    assert count_monochromatic_colorings(fig1, {E2, E3}, 4) == 16
    assert count_monochromatic_colorings(fig1, set(), 3) == 3 ** 4
    assert count_monochromatic_colorings(fig1, {0, 1, 3}, 5) == 5
    with pytest.raises(InvalidInputError):
        count_monochromatic_colorings(fig1, set(), 0)


def test_count_monochromatic_matches_enumeration():
    for g in graphs_upto(4):
        for t in (1, 2, 3):
            colorings = list(enumerate_colorings(g, t))
            for s in all_subsets(g):
                brute = sum(1 for k in colorings if is_monochromatic_on(g, s, k))
                assert count_monochromatic_colorings(g, s, t) == brute


def test_fig1_4_colorings_for_lemma(fig1):
    brute = sum(1 for k in enumerate_colorings(fig1, 4) if is_monochromatic_on(fig1, {E2, E3}, k))
    assert brute == 16


def test_proper_and_monochromatic_forces_empty_subset():
    for g in graphs_upto(5):
        if g.n > 4 and g.m > 6:
            continue
        for t in (1, 2, 3):
            proper = [k for k in enumerate_colorings(g, t) if is_proper(g, k)]
            for s in all_subsets(g):
                if s:
                    assert not any(is_monochromatic_on(g, s, k) for k in proper)


def test_color_permutation_preserves_properness():
    rng = random.Random(3)
    for g in graphs_upto(4):
        k = tuple(rng.randint(1, 3) for _ in range(g.n))
        for perm in permutations((1, 2, 3)):
            relabeled = tuple(perm[c - 1] for c in k)
            assert is_proper(g, relabeled) == is_proper(g, k)


def test_is_compatible_examples(fig1):
    o = Orientation.from_arcs(fig1, [(W, V), (W, U), (V, U), (V, X)])
    assert is_compatible(o, (3, 3, 1, 4))
    assert all(is_compatible(o, (2, 2, 2, 2)) for o in all_orientations(fig1))
    single = Orientation.from_arcs(k2(), [(0, 1)])
    assert not is_compatible(single, (2, 1))


def test_enumerate_colorings_examples():
    assert list(enumerate_colorings(Graph(1), 2)) == [(1,), (2,)]
    assert len(list(enumerate_colorings(Graph(2), 2))) == 4
    g = Graph(4, ((0, 1), (1, 2), (2, 3)))
    colorings = list(enumerate_colorings(g, 3))
    assert len(colorings) == 81 and colorings == sorted(colorings)
    independent = sum(1 for k in colorings if k[0] != k[1] and k[1] != k[2] and k[2] != k[3])
    assert sum(1 for k in colorings if is_proper(g, k)) == independent == 24


def test_enumerate_colorings_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_colorings(Graph(10), 5, budget=1000))
    with pytest.raises(InvalidInputError):
        list(enumerate_colorings(Graph(2), 0))


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("CHROMABIJ_BUDGET", "10")
    with pytest.raises(BudgetExceededError):
        list(enumerate_colorings(Graph(3), 3))
