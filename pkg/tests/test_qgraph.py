import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from qarygraph.qgraph import (
    GraphError,
    NotATreeError,
    QGraph,
    Walk,
    check_degree_sum,
    check_tree_count,
    close,
    closure,
    complete,
    components,
    degree,
    family,
    find_cycle,
    find_path,
    format_graph,
    is_connected,
    is_forest,
    is_subgraph,
    is_tree,
    neighbourhood_space,
    nondegenerate,
    parse_graph,
    path_seed,
    q_path2,
    q_triangle,
    star_seed,
    stats_lines,
    validate,
    vertices,
)
from qarygraph.spaces import enumerate_subspaces, span


def sp(n, *vecs, q=2):
    return span(vecs, q, n)


def e(n, *idx):
    v = [0] * n
    for i in idx:
        v[i - 1] = 1
    return tuple(v)


def test_vertices_examples():
    assert len(vertices(q_triangle(2))) == 7
    assert vertices(QGraph(2, 3, ())) == []
    assert len(vertices(closure(2, 5, path_seed(2, 4).edges))) == 15


def test_degree_examples():
    s4 = closure(2, 5, star_seed(2, 4).edges)
    assert degree(s4, sp(5, e(5, 1))) == 4
    single = QGraph(2, 3, (sp(3, e(3, 1), e(3, 2)),))
    assert degree(single, sp(3, e(3, 1))) == 1
    c3 = q_triangle(2)
    assert all(degree(c3, x) == 2 for x in vertices(c3))
    assert neighbourhood_space(c3, sp(3, e(3, 1))).dim == 3


def test_validate_examples():
    assert validate(q_triangle(2)).ok
    assert validate(QGraph(2, 3, ())).ok
    rep = validate(path_seed(2, 4))
    assert not rep.ok
    assert rep.witness_vertex == sp(5, e(5, 2))
    assert rep.missing_edge == sp(5, e(5, 2), e(5, 1, 3))


def test_closure_examples():
    p4 = closure(2, 5, path_seed(2, 4).edges)
    assert len(p4.edges) == 7
    for edge in (sp(5, e(5, 2), e(5, 1, 3)), sp(5, e(5, 3), e(5, 2, 4)), sp(5, e(5, 4), e(5, 3, 5))):
        assert edge in p4.edge_set
    assert len(closure(2, 5, star_seed(2, 4).edges).edges) == 15
    assert close(p4) == p4


def test_subgraph_examples():
    c3 = q_triangle(2)
    assert is_subgraph(c3, QGraph(2, 3, c3.edges[:1]))
    two = QGraph(2, 3, (sp(3, e(3, 1), e(3, 2)), sp(3, e(3, 1), e(3, 3))))
    assert not is_subgraph(c3, two)
    assert is_subgraph(c3, c3)
    assert not is_subgraph(q_path2(2), c3)


def test_paths():
    c3 = q_triangle(2)
    assert is_connected(c3)
    x = sp(3, e(3, 1))
    w = find_path(c3, x, x)
    assert len(w) == 0 and w.is_path()
    y = sp(3, e(3, 2, 3))
    w = find_path(c3, x, y)
    assert w.is_path() and w.vertices[0] == x and w.vertices[-1] == y
    two = closure(2, 5, [sp(5, e(5, 1), e(5, 2)), sp(5, e(5, 4), e(5, 5))])
    assert not is_connected(two)
    assert len(components(two)) == 2
    assert find_path(two, sp(5, e(5, 1)), sp(5, e(5, 5))) is None
    with pytest.raises(GraphError):
        find_path(c3, x, sp(3, e(3, 1), e(3, 2)))


def test_cycles_and_trees():
    for g in (q_path2(2), closure(2, 5, path_seed(2, 4).edges), closure(2, 5, star_seed(2, 4).edges)):
        assert is_tree(g) and find_cycle(g) is None
    c3 = q_triangle(2)
    cyc = find_cycle(c3)
    assert cyc is not None and cyc.is_cycle()
    assert len(set(cyc.edges)) == len(cyc.edges) >= 2
    assert not is_forest(c3) and not is_tree(c3)
    assert check_tree_count(c3, require_tree=False).lhs == 7 * 2 + 1 != 7
    with pytest.raises(NotATreeError):
        check_tree_count(c3)


def test_empty_graph_is_vacuous():
    g = QGraph(2, 3, ())
    assert validate(g).ok and is_forest(g) and is_connected(g)
    assert not is_tree(g)
    rep = check_degree_sum(g)
    assert (rep.lhs, rep.rhs) == (0, 0)


def test_walk_predicates():
    a, b = sp(3, e(3, 1)), sp(3, e(3, 2))
    ab = sp(3, e(3, 1), e(3, 2))
    assert Walk((a, ab, b)).is_path()
    assert not Walk((a, ab, sp(3, e(3, 3)))).is_walk()
    assert Walk((a, ab, b, ab, a)).is_walk()
    assert not Walk((a, ab, b, ab, a)).is_cycle()


def test_counting_identities():
    assert str(check_degree_sum(q_path2(2))) == "degree-sum 9 = 9 : PASS"
    assert (check_degree_sum(q_triangle(2)).lhs, check_degree_sum(q_triangle(2)).rhs) == (21, 21)
    single = QGraph(2, 3, (sp(3, e(3, 1), e(3, 2)),))
    assert (check_tree_count(single).lhs, check_tree_count(single).rhs) == (3, 3)
    s4 = closure(2, 5, star_seed(2, 4).edges)
    assert check_tree_count(s4).rhs == 31


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3]), st.data())
def test_degree_sum_holds_on_closures(q, data):
    n = 4 if q == 2 else 3
    edges = list(enumerate_subspaces(n, 2, q))
    seed = data.draw(st.lists(st.sampled_from(edges), min_size=1, max_size=4))
    g = closure(q, n, seed)
    assert validate(g).ok
    assert oracles.brute_validate([oracles.span_set(x.basis, q, n) for x in g.edges], q, n)
    assert check_degree_sum(g).ok
    if is_tree(g):
        assert check_tree_count(g).ok
    assert close(g) == g


def test_families():
    assert len(q_triangle(2).edges) == 7
    assert q_path2(2).edges == (sp(3, e(3, 1), e(3, 2)), sp(3, e(3, 2), e(3, 3)), sp(3, e(3, 2), e(3, 1, 3)))
    assert complete(2, 3) == q_triangle(2)
    assert len(q_path2(3).edges) == 4
    assert family("star_seed", 2, 4) == star_seed(2, 4)
    assert nondegenerate(q_path2(2))
    with pytest.raises(GraphError):
        family("path_seed", 2)
    with pytest.raises(GraphError):
        family("nope", 2)


def test_graph_file_round_trip():
    g = closure(2, 5, path_seed(2, 4).edges)
    text = format_graph(g)
    assert text.splitlines()[:2] == ["graph q=2 v=5", "closed=true"]
    back = parse_graph(text)
    assert back.graph == g and back.claimed_closed is True
    inline = parse_graph("graph q=2 v=3 closed=false\n# comment\nedge 1,0,0;0,1,0\n")
    assert inline.claimed_closed is False and len(inline.graph.edges) == 1


@pytest.mark.parametrize("text,needle", [
    ("", "empty"),
    ("graph q=2\n", "line 1"),
    ("graph q=2 v=3\nedge 1,0,0\n", "line 2"),
    ("graph q=2 v=3\nedge 1,0,0;0,1,0;0,0,1\n", "3-dimensional"),
    ("graph q=2 v=3\nedge 1,0;0,1\n", "line 2"),
    ("graph q=2 v=3\nclosed=maybe\n", "closed="),
    ("graph q=2 v=3\nvertex 1,0,0\n", "unrecognised"),
])
def test_graph_file_errors(text, needle):
    with pytest.raises(GraphError) as err:
        parse_graph(text)
    assert needle in str(err.value)


def test_edges_must_be_planes():
    with pytest.raises(GraphError):
        QGraph(2, 3, (sp(3, e(3, 1)),))


def test_stats_lines_determinism():
    rng = random.Random(0)
    edges = list(enumerate_subspaces(4, 2, 2))
    g = closure(2, 4, rng.sample(edges, 3))
    shuffled = QGraph(2, 4, tuple(reversed(g.edges)))
    assert stats_lines(g) == stats_lines(shuffled)
    assert format_graph(g) == format_graph(shuffled)
