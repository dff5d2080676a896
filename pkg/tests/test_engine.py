import itertools

import pytest

from cordial import (
    Digraph,
    GammaTriple,
    Graph,
    LabelingReport,
    Orientation,
    VertexLabeling,
    alternating_path,
    arc_label,
    complete_graph,
    construct_witness_orientation,
    counterexample_tree,
    gamma_triple,
    is_balanced_triple,
    is_cordial,
    is_friendly,
    is_orientable,
    lambda_count,
    orient,
    path_graph,
    petersen_graph,
    reverse,
)


def all_labelings(n):
    for mask in range(1 << n):
        yield VertexLabeling(n, mask)


class TestArcLabel:
    def test_values(self):
        assert arc_label(0, 1) == 1
        assert arc_label(1, 1) == 0
        assert arc_label(1, 0) == -1


class TestGammaTriple:
    def test_short_directed_path(self):
        d = Digraph(3, ((0, 1), (1, 2)))
        lab = VertexLabeling.from_labels((0, 1, 0))
        assert gamma_triple(d, lab) == (1, 1, 0)

    def test_constant_labeling_gives_all_zero_arcs(self):
        d = alternating_path(10)
        assert gamma_triple(d, VertexLabeling(10, 0)) == (0, 0, 9)

    def test_alternating_ones_on_even_positions(self):
        d = alternating_path(10)
        lab = VertexLabeling.from_ones(10, [0, 2, 4, 6, 8])
        assert gamma_triple(d, lab) == (0, 9, 0)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            gamma_triple(Digraph(3, ()), VertexLabeling(2, 0))

    def test_components_sum_to_arc_count(self):
        d = alternating_path(8)
        for lab in all_labelings(8):
            assert sum(gamma_triple(d, lab)) == d.arc_count


class TestPredicates:
    def test_friendly(self):
        assert is_friendly(VertexLabeling.from_ones(10, range(5)))
        assert not is_friendly(VertexLabeling.from_ones(10, range(4)))
        assert is_friendly(VertexLabeling.from_ones(5, range(3)))
        assert is_friendly(VertexLabeling(1, 0))

    def test_balanced_triple(self):
        assert is_balanced_triple(GammaTriple(3, 3, 3))
        assert is_balanced_triple(GammaTriple(5, 4, 5))
        assert not is_balanced_triple(GammaTriple(4, 2, 3))
        assert is_balanced_triple(GammaTriple(0, 0, 0))


class TestIsCordial:
    def test_single_arc(self):
        report = is_cordial(Digraph(2, ((0, 1),)))
        assert report is not None
        assert report.labeling.labels() == (0, 1)
        assert report.gamma == (1, 0, 0)

    def test_directed_p4_first_witness(self):
        report = is_cordial(Digraph(4, ((0, 1), (1, 2), (2, 3))))
        assert report is not None
        assert report.labeling.labels() == (0, 1, 1, 0)
        assert report.gamma == (1, 1, 1)

    def test_alternating_p10_not_cordial(self):
        assert is_cordial(alternating_path(10)) is None

    def test_empty_digraph_is_cordial(self):
        report = is_cordial(Digraph(3, ()))
        assert report is not None
        assert report.gamma == (0, 0, 0)

    def test_agrees_with_reversal(self):
        g = path_graph(6)
        for bits in range(1 << 5):
            d = orient(g, Orientation(g, bits))
            assert (is_cordial(d) is None) == (is_cordial(reverse(d)) is None)


class TestLambdaCount:
    def test_p4_example(self):
        lab = VertexLabeling.from_labels((1, 0, 0, 1))
        assert lambda_count(path_graph(4), lab) == 1

    def test_p6_example(self):
        lab = VertexLabeling.from_labels((1, 1, 0, 0, 1, 0))
        assert lambda_count(path_graph(6), lab) == 2

    def test_k6_every_friendly_labeling_gives_six(self):
        g = complete_graph(6)
        for ones in itertools.combinations(range(6), 3):
            lab = VertexLabeling.from_ones(6, ones)
            assert lambda_count(g, lab) == 6

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            lambda_count(path_graph(3), VertexLabeling(4, 0))

    def test_equals_gamma_zero_for_every_orientation(self):
        g = path_graph(4)
        for bits in range(8):
            d = orient(g, Orientation(g, bits))
            for lab in all_labelings(4):
                assert gamma_triple(d, lab).gamma_zero == lambda_count(g, lab)


class TestGammaSymmetries:
    def test_exhaustive_on_small_paths(self):
        g = path_graph(4)
        for bits in range(8):
            d = orient(g, Orientation(g, bits))
            for lab in all_labelings(4):
                a, b, z = gamma_triple(d, lab)
                assert gamma_triple(reverse(d), lab) == (b, a, z)
                assert gamma_triple(d, lab.complement()) == (b, a, z)
                assert gamma_triple(reverse(d), lab.complement()) == (a, b, z)


class TestIsOrientable:
    def test_p6_has_witness(self):
        w = is_orientable(path_graph(6))
        assert w is not None
        assert is_friendly(w.labeling)
        gam = gamma_triple(orient(path_graph(6), w.orientation), w.labeling)
        assert gam == w.gamma
        assert is_balanced_triple(gam)
        assert lambda_count(path_graph(6), w.labeling) in (1, 2)

    def test_counterexample_tree_empty(self):
        assert is_orientable(counterexample_tree()) is None

    def test_petersen_empty(self):
        assert is_orientable(petersen_graph()) is None

    def test_single_vertex(self):
        w = is_orientable(Graph(1, ()))
        assert w is not None
        assert w.gamma == (0, 0, 0)


class TestConstructWitness:
    def test_p4_mixed_labeling(self):
        g = path_graph(4)
        lab = VertexLabeling.from_labels((1, 0, 0, 1))
        o = construct_witness_orientation(g, lab)
        assert o.bit_string() == "101"
        assert gamma_triple(orient(g, o), lab) == (1, 1, 1)

    def test_p6_example_split(self):
        g = path_graph(6)
        lab = VertexLabeling.from_labels((1, 1, 0, 0, 1, 0))
        o = construct_witness_orientation(g, lab)
        gam = gamma_triple(orient(g, o), lab)
        assert gam == (2, 1, 2)
        assert is_balanced_triple(gam)

    def test_rejects_unfriendly_labeling(self):
        with pytest.raises(ValueError, match="friendly"):
            construct_witness_orientation(path_graph(4), VertexLabeling(4, 0))

    def test_rejects_lambda_outside_window(self):
        lab = VertexLabeling.from_labels((1, 0, 1, 0))
        with pytest.raises(ValueError, match="window"):
            construct_witness_orientation(path_graph(4), lab)

    def test_always_balanced_when_window_holds(self):
        # every graph on <= 4 vertices, every friendly labeling in the window
        for n in range(1, 5):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            for gbits in range(1 << len(pairs)):
                g = Graph(n, tuple(p for j, p in enumerate(pairs) if gbits >> j & 1))
                m = g.edge_count
                for lab in all_labelings(n):
                    if not is_friendly(lab):
                        continue
                    if lambda_count(g, lab) not in (m // 3, (m + 2) // 3):
                        continue
                    o = construct_witness_orientation(g, lab)
                    gam = gamma_triple(orient(g, o), lab)
                    assert is_balanced_triple(gam)
                    mprime = m - lambda_count(g, lab)
                    assert gam == ((mprime + 1) // 2, mprime // 2, m - mprime)


class TestLabelingReport:
    def test_inconsistent_verdict_rejected(self):
        lab = VertexLabeling.from_labels((0, 1))
        with pytest.raises(ValueError):
            LabelingReport(labeling=lab, verdict=False, gamma=GammaTriple(1, 0, 0))

    def test_consistent_report_accepted(self):
        lab = VertexLabeling.from_labels((0, 1))
        report = LabelingReport(labeling=lab, verdict=True, gamma=GammaTriple(1, 0, 0))
        assert report.verdict
