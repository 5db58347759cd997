import pytest

from chordal_lab.graphs import LabeledGraph, complete_graph
from chordal_lab.bruteforce import (
    BruteCounts,
    bitmask_of,
    brute_counts,
    check_class_membership,
    class_members,
    enumerate_graphs,
    graph_from_bitmask,
    split_class_counts,
    uniformity_test,
)


class TestEnumeration:
    @pytest.mark.parametrize("n,total", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64)])
    def test_counts(self, n, total):
        graphs = list(enumerate_graphs(n))
        assert len(graphs) == total
        assert len(set(graphs)) == total

    def test_envelope(self):
        with pytest.raises(ValueError):
            list(enumerate_graphs(8))

    def test_bitmask_roundtrip(self):
        for mask in range(64):
            g = graph_from_bitmask(4, mask)
            assert bitmask_of(g) == mask

    def test_bitmask_requires_canonical_labels(self):
        with pytest.raises(ValueError):
            bitmask_of(LabeledGraph([2, 3]))


class TestBruteCounts:
    def test_n3(self):
        bc = brute_counts(3)
        assert bc.chordal_all[3] == 8
        assert bc.chordal_connected[3] == 4
        assert bc.chordal_connected[1] == 0

    def test_n4(self):
        bc = brute_counts(4)
        assert bc.chordal_all[4] == 61
        assert bc.chordal_connected[4] == 35
        assert bc.chordal_connected[2] == 16

    def test_split_classes_partition(self):
        for n in range(6):
            total, q0, q1, qge2 = split_class_counts(n)
            assert q0 + q1 + qge2 == total

    def test_graph_listing(self):
        bc = brute_counts(3, include_graphs=True)
        assert bc.chordal_graphs is not None
        assert len(bc.chordal_graphs) == 8
        masks = {m for m, _, _ in bc.chordal_graphs}
        assert len(masks) == 8

    def test_counts_are_dataclass(self):
        assert isinstance(brute_counts(2), BruteCounts)


class TestClassMembership:
    def test_complete_graph_single_round(self):
        k3 = complete_graph([1, 2, 3])
        assert check_class_membership("exact_single", (1, 0, 3), k3, omega=3)
        assert not check_class_membership("exact_single", (2, 0, 3), k3, omega=3)
        assert not check_class_membership("exact_single", (1, 0, 3), k3, omega=2)

    def test_path_takes_two_rounds(self):
        p3 = LabeledGraph([1, 2, 3], [(1, 2), (2, 3)])
        assert check_class_membership("exact_single", (2, 0, 3), p3, omega=3)

    def test_wrong_vertex_set(self):
        g = complete_graph([2, 3, 4])
        assert not check_class_membership("exact_single", (1, 0, 3), g, omega=3)

    def test_class_members_counts(self):
        assert len(class_members("exact_single", (1, 0, 3), 3)) == 1
        assert len(class_members("exact_single", (2, 0, 3), 3)) == 3

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            check_class_membership("bogus", (1, 2, 3), complete_graph([1]), 1)


class TestUniformityTest:
    def test_degenerate_concentration_fails(self):
        res = uniformity_test(["a"] * 1000, ["a", "b"])
        assert not res.passed and res.statistic > res.threshold

    def test_exactly_uniform_passes_with_zero_statistic(self):
        res = uniformity_test(["a", "b", "c"] * 100, ["a", "b", "c"])
        assert res.passed and res.statistic == 0

    def test_sample_outside_support_fails_fast(self):
        res = uniformity_test(["a", "z"], ["a", "b"])
        assert not res.passed and "outside support" in res.message

    def test_empty_support_rejected(self):
        with pytest.raises(ValueError):
            uniformity_test([], [])

    def test_duplicate_support_rejected(self):
        with pytest.raises(ValueError):
            uniformity_test([], ["a", "a"])

    def test_single_bin_trivially_passes(self):
        assert uniformity_test(["a", "a"], ["a"]).passed
