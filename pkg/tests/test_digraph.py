import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ildt.digraph import ArcKind, count_basic, find_oriented_cycle, make_digraph, verify_ham_cycle
from ildt.errors import InvalidGraphError
from ildt.generator import ildt_iterate
from ildt.graphio import builtin_seed


@st.composite
def digraphs(draw, max_nodes=7):
    n = draw(st.integers(0, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_digraph(n, arcs)


def test_counts_of_small_graphs():
    assert count_basic(builtin_seed("c3")).as_dict() == {"n": 3, "e": 3, "b": 0}
    assert count_basic(builtin_seed("k2bi")).as_dict() == {"n": 2, "e": 2, "b": 1}
    assert count_basic(builtin_seed("k1")).as_dict() == {"n": 1, "e": 0, "b": 0}


def test_rejects_bad_arcs():
    with pytest.raises(InvalidGraphError):
        make_digraph(3, [(0, 3)])
    with pytest.raises(InvalidGraphError):
        make_digraph(3, [(1, 1)])
    with pytest.raises(InvalidGraphError):
        make_digraph(-1, [])


def test_arc_kinds():
    g = make_digraph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.arc_kind(0, 1) is ArcKind.BIDIRECTIONAL
    assert g.arc_kind(1, 2) is ArcKind.ONE_WAY
    with pytest.raises(KeyError):
        g.arc_kind(2, 1)
    assert g.neighbors(1) == {0, 2}


@given(digraphs())
def test_arcs_split_into_one_way_and_pairs(g):
    c = count_basic(g)
    one_way = sum(1 for u, v in g.arcs() if not g.has_arc(v, u))
    assert c.e == one_way + 2 * c.b == g.num_arcs
    assert list(g.arcs()) == sorted(g.arcs())


def _nx_has_cycle(g, require_one_way):
    h = nx.DiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.arcs())
    for cyc in nx.simple_cycles(h):
        if len(cyc) < 3:
            continue
        arcs = list(zip(cyc, cyc[1:] + cyc[:1]))
        if not require_one_way or any(not g.has_arc(v, u) for u, v in arcs):
            return True
    return False


def _is_cycle(g, cyc, require_one_way):
    arcs = list(zip(cyc, cyc[1:] + cyc[:1]))
    ok = len(cyc) >= 3 and len(set(cyc)) == len(cyc) and all(g.has_arc(u, v) for u, v in arcs)
    if require_one_way:
        ok = ok and any(not g.has_arc(v, u) for u, v in arcs)
    return ok


@settings(max_examples=300, deadline=None)
@given(digraphs(), st.booleans())
def test_oriented_cycle_matches_exhaustive_enumeration(g, require_one_way):
    found = find_oriented_cycle(g, require_one_way=require_one_way)
    assert (found is not None) == _nx_has_cycle(g, require_one_way)
    if found is not None:
        assert _is_cycle(g, found, require_one_way)


def test_oriented_cycle_examples():
    assert find_oriented_cycle(builtin_seed("c3")) == (0, 1, 2)
    assert find_oriented_cycle(builtin_seed("dag2")) is None
    assert find_oriented_cycle(builtin_seed("k2bi"), require_one_way=False) is None
    assert find_oriented_cycle(builtin_seed("k3bi")) is None
    assert find_oriented_cycle(builtin_seed("k3bi"), require_one_way=False) is not None


def test_bidirected_triangle_is_not_oriented_cycle():
    # a single arc grows an all-bidirectional triangle at step 2; only the
    # relaxed search sees it, so the default must insist on a one-way arc
    g2 = ildt_iterate(builtin_seed("dag2"), 2).graph
    relaxed = find_oriented_cycle(g2, require_one_way=False)
    assert relaxed is not None
    assert all(g2.is_bidirectional(u, v) for u, v in zip(relaxed, relaxed[1:] + relaxed[:1]))
    assert find_oriented_cycle(g2) is None


def test_verify_ham_cycle():
    c3 = builtin_seed("c3")
    assert verify_ham_cycle(c3, (0, 1, 2))
    assert verify_ham_cycle(c3, (1, 2, 0))
    assert not verify_ham_cycle(c3, (0, 2, 1))
    assert not verify_ham_cycle(c3, (0, 1))
    assert not verify_ham_cycle(c3, (0, 1, 1))
    assert not verify_ham_cycle(builtin_seed("k2bi"), (0, 1))


@given(digraphs(max_nodes=6))
def test_verify_ham_cycle_matches_brute_force(g):
    for perm in itertools.permutations(range(g.n)):
        expected = g.n >= 3 and all(g.has_arc(perm[i], perm[(i + 1) % g.n]) for i in range(g.n))
        assert verify_ham_cycle(g, perm) == expected
