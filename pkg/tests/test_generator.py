import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ildt.census import basic_recurrence_step, closed_form_basic
from ildt.digraph import count_basic, make_digraph
from ildt.errors import GrowthOverflowError, PreconditionError
from ildt.generator import (
    Generation,
    block_members,
    block_of,
    clones_at,
    generations,
    ildt_iterate,
    ildt_step,
)
from ildt.graphio import builtin_seed


def test_c3_one_step():
    g1 = ildt_iterate(builtin_seed("c3"), 1).graph
    assert g1.n == 6
    assert count_basic(g1).as_dict() == {"n": 6, "e": 15, "b": 3}
    # clone 3 of node 0 copies 0 -> 1 and 2 -> 0 and pairs with 0
    assert set(g1.succ[3]) == {0, 1}
    assert set(g1.pred[3]) == {0, 2}
    assert all(g1.is_bidirectional(i, i + 3) for i in range(3))


def test_k1_grows_to_paths_of_pairs():
    g = ildt_iterate(builtin_seed("k1"), 2).graph
    assert sorted(g.arcs()) == sorted([(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1), (0, 3), (3, 0), (1, 3), (3, 1)])


@pytest.mark.parametrize("t", range(5))
def test_counts_follow_recurrence(seed, t):
    _, g0 = seed
    gens = generations(g0, t)
    for a, b in zip(gens, gens[1:]):
        assert b.graph.n == 2 * a.graph.n
        assert count_basic(b.graph) == basic_recurrence_step(count_basic(a.graph))
    assert count_basic(gens[-1].graph) == closed_form_basic(count_basic(g0), t)


def test_clones_are_independent(seed):
    _, g0 = seed
    for t in range(1, 5):
        g = ildt_iterate(g0, t).graph
        fresh = range(g.n // 2, g.n)
        assert not any(g.has_arc(x, y) for x in fresh for y in fresh)


def test_clone_copies_parent_neighbourhood(seed):
    _, g0 = seed
    prev = ildt_iterate(g0, 2).graph
    g = ildt_iterate(g0, 3).graph
    n = prev.n
    for x in range(n):
        assert set(g.succ[x + n]) == set(prev.succ[x]) | {x}
        assert set(g.pred[x + n]) == set(prev.pred[x]) | {x}
        assert set(g.succ[x]) == set(prev.succ[x]) | {y + n for y in prev.succ[x]} | {x + n}


@pytest.mark.parametrize("t", range(5))
def test_blocks_are_copies_of_grown_k1(seed, t):
    _, g0 = seed
    g = ildt_iterate(g0, t).graph
    k = ildt_iterate(builtin_seed("k1"), t).graph
    for root in range(g0.n):
        block = g.induced(block_members(g0.n, t, root))
        assert block == k
        assert all(block.has_arc(v, u) for u, v in block.arcs())


@pytest.mark.parametrize("t", range(4))
def test_seed_node_reaches_whole_neighbouring_block(seed, t):
    _, g0 = seed
    g = ildt_iterate(g0, t).graph
    for u, v in g0.arcs():
        assert all(g.has_arc(u, y) for y in block_members(g0.n, t, v))


@pytest.mark.parametrize("t", range(4))
def test_arcs_between_blocks_follow_seed_arcs(seed, t):
    _, g0 = seed
    g = ildt_iterate(g0, t).graph
    for x, y in g.arcs():
        if x % g0.n != y % g0.n:
            assert g0.has_arc(x % g0.n, y % g0.n)


def test_block_of_examples():
    lin = ildt_iterate(builtin_seed("c3"), 2).lineage
    assert block_of(lin, 7) == 1
    assert all(block_of(lin, x) == x % 3 for x in range(12))
    assert block_of(ildt_iterate(builtin_seed("k1"), 2).lineage, 3) == 0
    with pytest.raises(PreconditionError):
        block_of(lin, 12)


def test_clones_at():
    lin = ildt_iterate(builtin_seed("c3"), 3).lineage
    assert clones_at(lin, 0) == frozenset(range(3))
    assert clones_at(lin, 2) == frozenset(range(6, 12))
    assert clones_at(lin, 3) == frozenset(range(12, 24))
    assert lin.parent(20) == 8 and lin.parent(1) is None
    with pytest.raises(PreconditionError):
        clones_at(lin, 4)


def test_overflow_is_raised_before_building():
    gen = Generation.seed(builtin_seed("c3"))
    with pytest.raises(GrowthOverflowError):
        ildt_step(gen, max_arcs=14)
    assert count_basic(ildt_step(gen, max_arcs=15).graph).e == 15


@st.composite
def undirected(draw):
    n = draw(st.integers(1, 6))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return n, edges


@settings(max_examples=50, deadline=None)
@given(undirected())
def test_undirected_embedding_agrees_with_iterated_local_transitivity(data):
    # bidirected seeds stay bidirected, and the underlying graph is the
    # undirected iterated local transitivity model: each clone joins its
    # parent and the parent's neighbours
    n, edges = data
    g0 = make_digraph(n, [a for u, v in edges for a in ((u, v), (v, u))])
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    g = g0
    for _ in range(3):
        g = ildt_iterate(g, 1).graph
        m = h.number_of_nodes()
        new = nx.Graph(h)
        for x in range(m):
            new.add_edges_from((x + m, y) for y in [x, *h.neighbors(x)])
        h = new
        assert all(g.has_arc(v, u) for u, v in g.arcs())
        assert {frozenset(a) for a in g.arcs()} == {frozenset(e) for e in h.edges()}
