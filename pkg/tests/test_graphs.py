import pytest

from cordial import (
    Digraph,
    Graph,
    Orientation,
    VertexLabeling,
    alternating_path,
    complete_graph,
    counterexample_tree,
    make_graph,
    max_edges,
    named,
    orient,
    parse_text,
    path_graph,
    petersen_graph,
    reverse,
    tight_bound_graph,
    to_text,
)


def bfs_connected(g):
    if g.vertex_count <= 1:
        return True
    adj = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


class TestMakeGraph:
    def test_canonicalizes_pair_order(self):
        g = make_graph(2, [(1, 0)])
        assert g.edges == ((0, 1),)

    def test_idempotent_reingestion(self):
        g = petersen_graph()
        assert make_graph(g.vertex_count, g.edges) == g

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            make_graph(3, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            make_graph(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="range"):
            make_graph(2, [(0, 2)])
        with pytest.raises(ValueError, match="range"):
            make_graph(2, [(-1, 1)])

    def test_direct_construction_requires_canonical_order(self):
        with pytest.raises(ValueError):
            Graph(3, ((1, 2), (0, 1)))
        with pytest.raises(ValueError):
            Graph(3, ((1, 0),))


class TestDigraph:
    def test_digon_rejected(self):
        with pytest.raises(ValueError, match="digon"):
            Digraph(2, ((0, 1), (1, 0)))

    def test_duplicate_arc_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Digraph(2, ((0, 1), (0, 1)))

    def test_loop_arc_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            Digraph(2, ((1, 1),))

    def test_reverse_involution(self):
        d = alternating_path(10)
        assert reverse(reverse(d)) == d

    def test_reverse_swaps_endpoints(self):
        assert reverse(Digraph(2, ((0, 1),))).arcs == ((1, 0),)
        r = reverse(alternating_path(10))
        assert r.arcs[:3] == ((1, 0), (1, 2), (3, 2))


class TestOrientation:
    def test_all_forward_path(self):
        g = path_graph(4)
        assert orient(g, Orientation(g, 0)).arcs == ((0, 1), (1, 2), (2, 3))

    def test_bit_pattern_matches_alternating_path(self):
        g = path_graph(10)
        o = Orientation.from_bit_string(g, "010101010")
        assert o.bits == 170
        assert orient(g, o) == alternating_path(10)

    def test_bit_string_round_trip(self):
        g = path_graph(5)
        for bits in range(16):
            o = Orientation(g, bits)
            assert Orientation.from_bit_string(g, o.bit_string()) == o

    def test_wrong_length_bits_rejected(self):
        g = path_graph(4)
        with pytest.raises(ValueError):
            Orientation(g, 8)
        with pytest.raises(ValueError):
            Orientation.from_bit_string(g, "0101")

    def test_mismatched_graph_rejected(self):
        o = Orientation(path_graph(4), 0)
        with pytest.raises(ValueError):
            orient(path_graph(5), o)

    def test_every_edge_becomes_exactly_one_arc(self):
        g = petersen_graph()
        for bits in (0, 170, (1 << 15) - 1, 0b101010101010101):
            d = orient(g, Orientation(g, bits))
            undirected = {tuple(sorted(a)) for a in d.arcs}
            assert undirected == set(g.edges)
            assert d.arc_count == g.edge_count


class TestVertexLabeling:
    def test_from_ones_and_labels(self):
        a = VertexLabeling.from_ones(4, [1, 3])
        b = VertexLabeling.from_labels((0, 1, 0, 1))
        assert a == b
        assert a.labels() == (0, 1, 0, 1)
        assert a.bit_string() == "0101"

    def test_complement(self):
        lab = VertexLabeling.from_ones(3, [0])
        assert lab.complement().ones == frozenset({1, 2})
        assert lab.complement().complement() == lab

    def test_mask_out_of_range(self):
        with pytest.raises(ValueError):
            VertexLabeling(3, 8)

    def test_bad_label_value(self):
        with pytest.raises(ValueError):
            VertexLabeling.from_labels((0, 2))


class TestNamedGraphs:
    def test_petersen_is_cubic_with_15_edges(self):
        g = petersen_graph()
        assert g.vertex_count == 10
        assert g.edge_count == 15
        assert set(g.degrees()) == {3}

    def test_counterexample_tree_shape(self):
        g = counterexample_tree()
        assert g.vertex_count == 10
        assert g.edge_count == 9
        assert bfs_connected(g)
        assert sorted(g.degrees()).count(3) == 4
        assert max(g.degrees()) == 3

    def test_alternating_path_arc_list(self):
        d = alternating_path(10)
        assert d.arcs == (
            (0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (6, 5), (6, 7), (8, 7), (8, 9),
        )

    @pytest.mark.parametrize("n", [4, 6, 10, 22])
    def test_alternating_path_degrees(self, n):
        d = alternating_path(n)
        out_deg = d.out_degrees()
        in_deg = d.in_degrees()
        sources = [v for v in range(n) if out_deg[v] >= 1]
        assert sources == list(range(0, n - 1, 2))
        assert len(sources) == (n - 1 + 1) // 2
        # interior odd vertices are sinks of in-degree 2, the endpoint is not
        for v in range(1, n - 2, 2):
            assert in_deg[v] == 2
        assert in_deg[n - 1] == 1

    def test_alternating_path_odd_rejected(self):
        with pytest.raises(ValueError):
            alternating_path(7)

    def test_path_and_complete_sizes(self):
        assert path_graph(10).edge_count == 9
        assert complete_graph(4).edge_count == 6
        assert complete_graph(1).edge_count == 0

    @pytest.mark.parametrize("n", range(3, 13))
    def test_tight_bound_edge_count_hits_max(self, n):
        assert tight_bound_graph(n).edge_count == max_edges(n)

    def test_tight_bound_contains_full_bipartite_part(self):
        g = tight_bound_graph(6)
        cross = {(u, v) for u in range(3) for v in range(3, 6)}
        assert cross <= set(g.edges)
        assert g.edge_count == 14

    def test_named_dispatch(self):
        assert named("petersen") == petersen_graph()
        assert named("path", 4) == path_graph(4)
        assert named("alternating_path", 10) == alternating_path(10)
        assert named("tight_bound", 6) == tight_bound_graph(6)

    def test_named_errors(self):
        with pytest.raises(ValueError, match="unknown"):
            named("snark")
        with pytest.raises(ValueError, match="requires"):
            named("path")
        with pytest.raises(ValueError, match="does not take"):
            named("petersen", 10)
        with pytest.raises(ValueError):
            named("alternating_path", 7)


class TestTextFormat:
    def test_graph_round_trip(self):
        for g in (petersen_graph(), path_graph(4), Graph(3, ())):
            assert parse_text(to_text(g)) == g

    def test_digraph_round_trip(self):
        d = alternating_path(10)
        assert parse_text(to_text(d)) == d

    def test_comments_and_blank_lines_skipped(self):
        text = "# a path\n\n3 2\n0 1\n# middle\n1 2\n"
        assert parse_text(text) == path_graph(3)

    def test_arc_lines(self):
        assert parse_text("2 1\n0 > 1\n") == Digraph(2, ((0, 1),))

    def test_mixed_lines_rejected(self):
        with pytest.raises(ValueError, match="mixes"):
            parse_text("3 2\n0 1\n1 > 2\n")

    def test_wrong_edge_count_rejected(self):
        with pytest.raises(ValueError, match="expected 2"):
            parse_text("3 2\n0 1\n")

    def test_bad_tokens_rejected(self):
        with pytest.raises(ValueError):
            parse_text("2 1\n0 x\n")
        with pytest.raises(ValueError):
            parse_text("2 1\n0 < 1\n")
        with pytest.raises(ValueError, match="empty"):
            parse_text("# nothing\n")
