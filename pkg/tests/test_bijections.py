import pytest

from chromabij.bijections import (
    ABNORMAL,
    NORMAL_A,
    NORMAL_B,
    UNORIENTED,
    VIOLATED_A,
    VIOLATED_B,
    Phi,
    Psi,
    StagedMixed,
    color_classes,
    final_state,
    initial_state,
    normal_arc,
    phi,
    phi_step,
    phi_step_traced,
    phi_trace,
    psi,
    psi_step,
    psi_step_traced,
    staged_states,
)
from chromabij.coloring import enumerate_colorings, is_compatible, is_monochromatic_on
from chromabij.errors import InvalidInputError, PreconditionError
from chromabij.graph import Graph, Orientation, all_orientations, all_subsets, is_nbc
from chromabij.poly import acyclic_orientations, chi_poly_nbc, nbc_subsets

from conftest import E1, E2, E3, E4, U, V, W, X, graphs_upto, k2

# A trace that mixes both rules uses these normal directions: u->w, v->u, v->w, v->x
MIXED_NORMAL = (True, False, True, True)
ALL_PLUS = (True, True, True, True)  # u->w, u->v, v->w, v->x


def test_normal_arc():
    g = Graph(4, ((0, 1), (1, 3)))
    assert normal_arc(g, 0) == (0, 1)
    assert normal_arc(g, 1) == (1, 3)
    assert normal_arc(g, 1, (True, False)) == (3, 1)
    with pytest.raises(InvalidInputError):
        normal_arc(g, 2)


def test_mixed_normal_trace(fig1):
    o = Orientation(fig1, ALL_PLUS)
    trace = phi_trace(fig1, o, MIXED_NORMAL, check=True)
    assert [label for _, label in trace[1:]] == [VIOLATED_B, VIOLATED_A, UNORIENTED, UNORIENTED]
    assert trace[-1][0].edges == frozenset({E3, E4})
    assert phi(fig1, o, MIXED_NORMAL) == frozenset({E3, E4})
    assert psi(fig1, {E3, E4}, MIXED_NORMAL) == o


def test_mixed_normal_step_one_would_close_a_cycle(fig1):
    # a1 = u->w is normal here, but as an edge it closes u-w with u->v->w
    o = Orientation(fig1, ALL_PLUS)
    state, label = phi_step_traced(initial_state(o), 1, MIXED_NORMAL)
    assert label == VIOLATED_B
    assert state.edges == frozenset() and state.stage == 1


def test_default_convention_fig1_trace(fig1):
    # low->high makes every arc normal; only e1 is lost, to u->v->w
    o = Orientation(fig1, ALL_PLUS)
    labels = [label for _, label in phi_trace(fig1, o)[1:]]
    assert labels == [VIOLATED_B, UNORIENTED, UNORIENTED, UNORIENTED]
    assert phi(fig1, o) == frozenset({E2, E3, E4})


def test_psi_step_examples(fig1):
    state = final_state(fig1, {E2, E4})
    prev, label = psi_step_traced(state, 4)
    assert label == NORMAL_A
    assert prev.direction[E4] is True and prev.edges == frozenset({E2})


def test_psi_single_edge_empty_set_is_abnormal():
    g = k2()
    state, label = psi_step_traced(final_state(g, set()), 1)
    assert label == ABNORMAL
    assert psi(g, set()) == Orientation(g, (False,))
    assert phi(g, Orientation(g, (False,))) == frozenset()
    assert phi(g, Orientation(g, (True,))) == frozenset({0})


def test_psi_b_prime(fig1):
    # rebuilding a1 abnormally (w->u) would close w->u->v->w
    state = StagedMixed(fig1, 1, frozenset(), (None, True, True, True))
    prev, label = psi_step_traced(state, 1)
    assert label == NORMAL_B and prev.direction[E1] is True


def test_edgeless_graph():
    g = Graph(3)
    o = Orientation(g, ())
    assert phi(g, o) == frozenset()
    assert psi(g, set()) == o


def test_preconditions(fig1):
    cyclic = Orientation.from_arcs(fig1, [(U, W), (W, V), (V, U), (V, X)])
    with pytest.raises(PreconditionError):
        phi(fig1, cyclic)
    with pytest.raises(PreconditionError):
        psi(fig1, {E1, E2})
    with pytest.raises(PreconditionError):
        phi_step(StagedMixed(fig1, 0, frozenset(), (True,) * 4), 2)
    bad = StagedMixed(fig1, 2, frozenset({E1, E2}), (None, None, True, True))
    assert "edge set contains a broken circuit" in bad.violations()
    with pytest.raises(PreconditionError):
        psi_step(bad, 2)


def test_phi_psi_bijection_exhaustive():
    for g in graphs_upto(5):
        orients = list(acyclic_orientations(g))
        images = set()
        for o in orients:
            s = phi(g, o)
            assert is_nbc(g, s)
            assert psi(g, s) == o
            images.add(s)
        nbc = set(nbc_subsets(g))
        assert images == nbc and len(orients) == len(nbc)
        for s in nbc:
            assert phi(g, psi(g, s)) == s


def test_phi_psi_with_other_normals(fig1):
    for bits in all_orientations(fig1):
        normal = bits.direction
        images = {phi(fig1, o, normal) for o in acyclic_orientations(fig1)}
        assert images == set(nbc_subsets(fig1))
        for s in images:
            assert phi(fig1, psi(fig1, s, normal), normal) == s


def test_staged_steps_inverse_exhaustive():
    for g in graphs_upto(5):
        if g.m > 5:
            continue
        for i in range(1, g.m + 1):
            before = list(staged_states(g, i - 1))
            after = list(staged_states(g, i))
            for state in before:
                nxt = phi_step(state, i, check=True)
                assert nxt.is_valid()
                assert psi_step(nxt, i, check=True) == state
            for state in after:
                prev = psi_step(state, i, check=True)
                assert prev.is_valid()
                assert phi_step(prev, i, check=True) == state
            assert len({phi_step(s, i) for s in before}) == len(before) == len(after)


def test_staged_mixed_describe(fig1):
    o = Orientation(fig1, ALL_PLUS)
    assert initial_state(o).describe() == "a1=0->2 a2=0->1 a3=1->2 a4=1->3"
    assert final_state(fig1, {E3, E4}).describe() == "e3=1-2 e4=1-3"


# --- colored versions --------------------------------------------------------

def test_color_classes(fig1):
    assert color_classes(fig1, (3, 3, 1, 3)) == {3: (E2, E4)}
    assert color_classes(fig1, (1, 2, 3, 4)) == {}


def test_Phi_injective_coloring_gives_empty(fig1):
    k = (1, 2, 3, 4)
    for o in acyclic_orientations(fig1):
        if is_compatible(o, k):
            assert Phi(fig1, k, o) == frozenset()
    unique = Psi(fig1, k, set())
    assert all(unique.arc(i)[0] < unique.arc(i)[1] for i in range(fig1.m))


def test_Phi_constant_coloring_is_phi(fig1):
    k = (1, 1, 1, 1)
    for o in acyclic_orientations(fig1):
        assert Phi(fig1, k, o) == phi(fig1, o)
    for s in nbc_subsets(fig1):
        assert Psi(fig1, k, s) == psi(fig1, s)


def test_Phi_Psi_bijection_exhaustive():
    for g in graphs_upto(4):
        orients = list(acyclic_orientations(g))
        nbc = nbc_subsets(g)
        for t in (1, 2, 3):
            total = 0
            for k in enumerate_colorings(g, t):
                compat = [o for o in orients if is_compatible(o, k)]
                sets = {s for s in nbc if is_monochromatic_on(g, s, k)}
                images = set()
                for o in compat:
                    s = Phi(g, k, o)
                    assert Psi(g, k, s) == o
                    images.add(s)
                assert images == sets
                for s in sets:
                    o = Psi(g, k, s)
                    assert o.is_acyclic() and is_compatible(o, k)
                    assert Phi(g, k, o) == s
                total += len(compat)
            assert total == (-1) ** g.n * chi_poly_nbc(g)(-t)


def test_Phi_preconditions(fig1):
    o = Orientation(fig1, ALL_PLUS)
    with pytest.raises(PreconditionError):
        Phi(fig1, (2, 1, 1, 1), o)  # arc u->v goes down in color
    with pytest.raises(PreconditionError):
        Psi(fig1, (1, 2, 1, 1), {E2})
    with pytest.raises(PreconditionError):
        Psi(fig1, (1, 1, 1, 1), {E1, E2})
