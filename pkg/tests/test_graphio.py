import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ildt.digraph import make_digraph
from ildt.errors import GraphParseError, InvalidGraphError
from ildt.generator import ildt_iterate
from ildt.graphio import (
    builtin_seed,
    builtin_walk,
    dumps,
    load_graph,
    parse_edgelist,
    parse_json,
    resolve_seed,
    save_graph,
    to_dot,
)


def test_json_example():
    g = parse_json('{"n":3,"arcs":[[0,1],[1,2],[2,0]]}')
    assert g == builtin_seed("c3")


def test_edgelist_example():
    assert parse_edgelist("0 1\n1 0\n") == builtin_seed("k2bi")


def test_json_arc_out_of_range():
    with pytest.raises(GraphParseError, match=r"\[0, 5\]"):
        parse_json('{"n":3,"arcs":[[0,5]]}')


@pytest.mark.parametrize(
    "text",
    ['{"n":3}', '{"n":-1,"arcs":[]}', '{"n":2,"arcs":[[0,0]]}', '{"n":2,"arcs":[[0,1,1]]}', "[1, 2]"],
)
def test_json_malformed(text):
    with pytest.raises(GraphParseError):
        parse_json(text)


def test_json_syntax_error_has_line():
    with pytest.raises(GraphParseError) as info:
        parse_json('{"n": 3,\n"arcs": [[0, 1],,]}')
    assert info.value.line == 2


def test_edgelist_errors_carry_line_numbers():
    with pytest.raises(GraphParseError) as info:
        parse_edgelist("# a comment\n0 1\n1 x\n")
    assert info.value.line == 3
    with pytest.raises(GraphParseError) as info:
        parse_edgelist("0 1 2\n")
    assert info.value.line == 1
    with pytest.raises(GraphParseError):
        parse_edgelist("# nodes: 2\n0 2\n")
    with pytest.raises(GraphParseError):
        parse_edgelist("3 3\n")


def test_edgelist_id_gaps():
    with pytest.raises(GraphParseError, match="contiguous"):
        parse_edgelist("0 2\n")
    g = parse_edgelist("# nodes: 3\n0 2\n")
    assert g.n == 3 and list(g.arcs()) == [(0, 2)]


@st.composite
def digraphs(draw):
    n = draw(st.integers(0, 9))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_digraph(n, arcs)


@settings(max_examples=100, deadline=None)
@given(digraphs(), st.sampled_from(["json", "edgelist"]))
def test_round_trip(g, fmt):
    parse = parse_json if fmt == "json" else parse_edgelist
    assert parse(dumps(g, fmt)) == g


@pytest.mark.parametrize("name", ["c3", "c4", "k1", "k2bi", "dag2", "p3bi", "c4bi"])
def test_file_round_trip(tmp_path, name):
    g = ildt_iterate(builtin_seed(name), 2).graph
    for suffix in (".json", ".txt"):
        path = tmp_path / f"g{suffix}"
        save_graph(g, path)
        assert load_graph(path) == g
    assert resolve_seed(str(tmp_path / "g.json")) == g


def test_dot_export(tmp_path):
    text = to_dot(make_digraph(3, [(0, 1), (1, 0), (1, 2)]))
    assert "0 -> 1 [dir=both];" in text
    assert "1 -> 2;" in text
    assert "1 -> 0" not in text
    path = tmp_path / "g.dot"
    path.write_text(text)
    with pytest.raises(GraphParseError):
        load_graph(path)


def test_builtin_seeds():
    assert builtin_seed("c5").n == 5
    assert builtin_seed("k1").n == 1 and builtin_seed("k1").num_arcs == 0
    assert list(builtin_seed("dag2").arcs()) == [(0, 1)]
    assert builtin_seed("k4bi").num_arcs == 12
    assert builtin_seed("p4bi").num_arcs == 6
    assert builtin_seed("c4bi").num_arcs == 8
    for bad in ("c2", "zz", "k0", "p3", "c1bi"):
        with pytest.raises(InvalidGraphError):
            builtin_seed(bad)
    assert resolve_seed("builtin:c3") == builtin_seed("c3")
    assert builtin_walk("c4") == (0, 1, 2, 3)
    assert builtin_walk("k2bi") is None
