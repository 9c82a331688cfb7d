"""Graph core: construction, graph6 I/O, induced subgraphs, isomorphism."""

import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamcert.errors import Graph6Error, UnsupportedGraphError
from hamcert.graphs import (
    Graph,
    canonical_form,
    induced_subgraph,
    is_isomorphic,
    iter_graph6,
    parse_graph6,
    write_dot,
    write_graph6,
)

from oracles import all_labeled_graphs, brute_isomorphic, random_graph


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


NET = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
SNARE = Graph(7, list(NET.edges()) + [(v, 6) for v in range(6)])
THETA222 = Graph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
K23 = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
CLAW = Graph(4, [(0, 1), (0, 2), (0, 3)])


class TestGraph:
    def test_basic_invariants(self):
        g = Graph(4, [(0, 1), (1, 2), (3, 1)])
        assert g.n == 4
        assert g.edge_count == 3
        assert g.neighbors(1) == (0, 2, 3)
        assert g.degree(1) == 3
        assert g.degree_sequence() == (1, 1, 1, 3)
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(0, 2)
        assert list(g.edges()) == [(0, 1), (1, 2), (1, 3)]

    def test_adjacency_symmetry_after_parse(self):
        g = parse_graph6("DQc")
        for u in range(g.n):
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)
                if u == v:
                    assert not g.has_edge(u, v)

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_equality_is_labelled(self):
        assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
        assert Graph(3, [(0, 1)]) != Graph(3, [(1, 2)])
        assert hash(Graph(3, [(0, 1)])) == hash(Graph(3, [(0, 1)]))


class TestGraph6:
    def test_one_vertex_record(self):
        # hand-encoded: n=1 -> header chr(63+1), zero payload bytes
        g = parse_graph6("@")
        assert g.n == 1 and g.edge_count == 0
        assert write_graph6(Graph(1)) == "@"

    def test_k2_record(self):
        # hand-encoded: n=2, single pair bit set -> 100000 -> chr(63+32) = '_'
        g = parse_graph6("A_")
        assert g.n == 2 and list(g.edges()) == [(0, 1)]
        assert write_graph6(Graph(2, [(0, 1)])) == "A_"
        assert write_graph6(Graph(2)) == "A?"

    def test_header_prefix_stripped(self):
        assert parse_graph6(">>graph6<<A_") == Graph(2, [(0, 1)])

    def test_error_empty(self):
        with pytest.raises(Graph6Error, match="malformed header"):
            parse_graph6("")

    def test_error_long_form(self):
        with pytest.raises(Graph6Error, match="long-form"):
            parse_graph6("~??")

    def test_error_header_out_of_range(self):
        with pytest.raises(Graph6Error, match="malformed header"):
            parse_graph6("0??")

    def test_error_payload_length(self):
        with pytest.raises(Graph6Error, match="length mismatch"):
            parse_graph6("B")
        with pytest.raises(Graph6Error, match="length mismatch"):
            parse_graph6("A__")

    def test_error_payload_byte(self):
        with pytest.raises(Graph6Error, match="out of range"):
            parse_graph6("A>")

    def test_error_padding(self):
        # n=2 uses one bit; low five bits of the payload byte must be zero
        with pytest.raises(Graph6Error, match="padding"):
            parse_graph6("A`")

    def test_write_rejects_large(self):
        with pytest.raises(UnsupportedGraphError):
            write_graph6(Graph(63))

    def test_roundtrip_all_small(self):
        for n in range(6):
            for g in all_labeled_graphs(n):
                assert parse_graph6(write_graph6(g)) == g

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 40), st.integers(0, 2**32 - 1))
    def test_roundtrip_random(self, n, seed):
        g = random_graph(random.Random(seed), n, 0.4)
        assert parse_graph6(write_graph6(g)) == g

    def test_iter_graph6_skips_blanks(self):
        gs = list(iter_graph6(["A_", "", "  ", "@", "\n"]))
        assert [g.n for g in gs] == [2, 1]


class TestInducedSubgraph:
    def test_c5_three_consecutive_is_path(self):
        sub, idx = induced_subgraph(cycle(5), [1, 2, 3])
        assert sub == Graph(3, [(0, 1), (1, 2)])
        assert idx == {1: 0, 2: 1, 3: 2}

    def test_snare_minus_dominating_vertex_is_net(self):
        sub, _ = induced_subgraph(SNARE, range(6))
        assert sub == NET

    def test_empty_subset(self):
        sub, idx = induced_subgraph(cycle(5), [])
        assert sub.n == 0 and idx == {}

    def test_out_of_range_member(self):
        with pytest.raises(ValueError):
            induced_subgraph(cycle(5), [0, 5])


class TestIsomorphism:
    def test_c5_relabelled(self):
        c5 = cycle(5)
        for perm in ([3, 0, 4, 1, 2], [4, 3, 2, 1, 0]):
            h = Graph(5, [(perm[u], perm[v]) for u, v in c5.edges()])
            assert is_isomorphic(c5, h)

    def test_theta222_is_k23(self):
        # brute force over all 5! bijections agrees
        assert brute_isomorphic(THETA222, K23)
        assert is_isomorphic(THETA222, K23)

    def test_net_vs_claw(self):
        assert not is_isomorphic(NET, CLAW)

    def test_c5_vs_k23(self):
        assert not is_isomorphic(cycle(5), K23)

    def test_same_degree_sequence_non_isomorphic(self):
        # C6 vs two triangles: both 2-regular on 6 vertices
        two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not brute_isomorphic(cycle(6), two_triangles)
        assert not is_isomorphic(cycle(6), two_triangles)

    def test_matches_brute_force_exhaustively(self):
        gs = list(all_labeled_graphs(4))
        for g in gs:
            for h in gs[:: 7]:
                assert is_isomorphic(g, h) == brute_isomorphic(g, h)


class TestCanonicalForm:
    def test_relabelling_invariance(self):
        g = SNARE
        rng = random.Random(7)
        base = canonical_form(g)
        for _ in range(25):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
            assert canonical_form(h) == base

    def test_three_vertex_classes(self):
        # all 2^3 labelled graphs on 3 vertices fall into 4 classes
        # (verified by grouping under brute-force isomorphism)
        forms = {canonical_form(g) for g in all_labeled_graphs(3)}
        assert len(forms) == 4

    def test_theta222_equals_k23(self):
        assert canonical_form(THETA222) == canonical_form(K23)

    def test_rejects_large(self):
        with pytest.raises(UnsupportedGraphError):
            canonical_form(Graph(13))

    @pytest.mark.parametrize("n,classes", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
    def test_partition_agrees_with_isomorphism(self, n, classes):
        groups = {}
        for g in all_labeled_graphs(n):
            groups.setdefault(canonical_form(g), []).append(g)
        assert len(groups) == classes
        # same form -> isomorphic
        for members in groups.values():
            rep = members[0]
            for other in members[1::17] + members[-1:]:
                assert brute_isomorphic(rep, other)
        # different form -> non-isomorphic
        reps = [members[0] for members in groups.values()]
        for a, b in combinations(reps, 2):
            assert not brute_isomorphic(a, b)

    def test_six_vertex_class_count(self):
        forms = set()
        reps = {}
        for g in all_labeled_graphs(6):
            f = canonical_form(g)
            if f not in forms:
                forms.add(f)
                reps[f] = g
        assert len(forms) == 156
        # representatives with equal degree sequences are still non-isomorphic
        buckets = {}
        for f, g in reps.items():
            buckets.setdefault(g.degree_sequence(), []).append(g)
        for gs in buckets.values():
            for a, b in combinations(gs, 2):
                assert not is_isomorphic(a, b)


class TestDot:
    def test_plain_export(self):
        out = write_dot(Graph(2, [(0, 1)]))
        assert out == 'graph G {\n  node [shape=circle];\n  0;\n  1;\n  0 -- 1;\n}\n'

    def test_highlight_marks_witness(self):
        out = write_dot(cycle(3), highlight=[1])
        assert "1 [style=filled, fillcolor=lightblue];" in out
        assert "0;" in out
