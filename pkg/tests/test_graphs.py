import pytest

from psdthrottle.graphs import (
    Graph,
    ParseError,
    SpiderPartition,
    WeightMap,
    contract_edge,
    format_weighted_tree,
    make_balanced_spider,
    make_cycle,
    make_full_binary_tree,
    make_path,
    make_spider,
    parse_edge_list,
    parse_spider,
    parse_weighted_tree,
)
from psdthrottle.concentration import branches_at

from conftest import random_tree


def test_make_path():
    assert make_path(1).n == 1 and not make_path(1).edges
    assert make_path(3).sorted_edges() == [(0, 1), (1, 2)]
    p = make_path(10)
    assert (p.n, len(p.edges)) == (10, 9)
    assert p.degree(0) == p.degree(9) == 1
    with pytest.raises(ValueError):
        make_path(0)


@pytest.mark.parametrize(
    "legs, order",
    [((7, 6, 2), 16), ((1, 1, 1), 4), ((4, 3, 2), 10), ((2, 4, 3), 10)],
)
def test_make_spider_order(legs, order):
    s = make_spider(legs)
    assert s.n == order and s.is_tree()
    assert [v for v in range(s.n) if s.degree(v) > 2] == [0]


def test_spider_star():
    s = make_spider((1, 1, 1))
    assert s.degree(0) == 3


def test_spider_rejects_two_legs():
    with pytest.raises(ValueError):
        make_spider((3, 2))
    with pytest.raises(ValueError):
        SpiderPartition((3, 0, 1))


def test_balanced_spider():
    assert make_balanced_spider(3, 7).n == 22
    assert make_balanced_spider(4, 6).n == 4 * 6 + 1
    star = make_balanced_spider(3, 1)
    assert star.degree_sequence() == (3, 1, 1, 1)
    for bad in [(2, 3), (3, 0)]:
        with pytest.raises(ValueError):
            make_balanced_spider(*bad)


@pytest.mark.parametrize("alpha, beta", [(3, 1), (3, 7), (4, 6), (5, 2)])
def test_balanced_equals_spider(alpha, beta):
    a = make_balanced_spider(alpha, beta)
    b = make_spider([beta] * alpha)
    assert a.degree_sequence() == b.degree_sequence()
    ones = WeightMap.uniform(a.n)
    code_a = sorted(br.code for br in branches_at(a, ones, 0).branches)
    code_b = sorted(br.code for br in branches_at(b, ones, 0).branches)
    assert code_a == code_b


def test_full_binary_tree():
    assert make_full_binary_tree(0).n == 1
    t1 = make_full_binary_tree(1)
    assert t1.n == 3 and t1.degree(0) == 2
    assert make_full_binary_tree(3).n == 2 ** 4 - 1
    assert make_full_binary_tree(2).labels[0] == "root"
    with pytest.raises(ValueError):
        make_full_binary_tree(99)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 2), (0, 2)], tree=True)
    with pytest.raises(ValueError):
        Graph(4, [(0, 1), (2, 3)], tree=True)
    assert not make_cycle(4).is_tree()


def test_contract_path_middle():
    assert contract_edge(make_path(3), 1, 2).sorted_edges() == [(0, 1)]


def test_contract_star_gives_p3():
    star = make_spider((1, 1, 1))
    c = contract_edge(star, 0, 2)
    # merged vertex 0 keeps leaves 1 and (3 -> 2)
    assert c.sorted_edges() == [(0, 1), (0, 2)]
    assert c.degree_sequence() == (2, 1, 1)


def test_contract_every_edge_of_path():
    g = make_path(7)
    while g.edges:
        u, v = g.sorted_edges()[0]
        g = contract_edge(g, u, v)
    assert g.n == 1


def test_contract_rejects_non_edge():
    with pytest.raises(ValueError):
        contract_edge(make_path(4), 0, 2)


def test_contract_random_trees(rng):
    for _ in range(50):
        t = random_tree(rng, rng.randint(2, 12))
        for u, v in t.sorted_edges():
            c = contract_edge(t, u, v)
            assert c.n == t.n - 1 and c.is_tree()


def test_weight_map():
    w = WeightMap([1, 2, 3])
    assert w.cost([0, 2]) == 4
    with pytest.raises(ValueError):
        WeightMap([1, 0])
    with pytest.raises(TypeError):
        WeightMap([1, 1.5])
    with pytest.raises(TypeError):
        WeightMap([True])
    assert WeightMap([2.0]).weights == (2,)


def test_parse_spider():
    assert parse_spider("S(4,3,2)").legs == (4, 3, 2)
    assert parse_spider("2, 4,3").legs == (4, 3, 2)
    for bad in ["S(4,3", "x", "S(1,2)"]:
        with pytest.raises(ParseError):
            parse_spider(bad)


def test_edge_list_roundtrip():
    g = make_spider((2, 2, 1))
    w = WeightMap([1, 2, 3, 1, 1, 5])
    text = format_weighted_tree(g, w)
    g2, w2 = parse_weighted_tree(text)
    assert g2.edges == g.edges and w2 == w
    assert parse_edge_list("3\n0 1\n# comment\n1 2\n").sorted_edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text, line",
    [
        ("x\n", 1),
        ("3\n0 1\n1 5\n", 3),
        ("3\n0 1\n\n1 1\n", 4),
        ("2\n0 1\nw 0 1\nw 1 0\n", 4),
        ("2\n0 1\nw 0 1\nw 1 1.5\n", 4),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_weighted_tree(text)
    assert exc.value.line == line
