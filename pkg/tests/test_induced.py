"""Induced-pattern searches against brute-force subset oracles."""

import random
from itertools import combinations

import pytest

from hamcert.errors import PreconditionError
from hamcert.families import (
    closed_theta,
    generate,
    is_triangle_free,
    net,
    nova,
    recognize_obstruction,
    snare,
    theta,
    wheel,
)
from hamcert.graphs import Graph, induced_subgraph
from hamcert.induced import (
    Embedding,
    find_induced,
    find_split_obstruction,
    find_tf_obstruction,
)

from oracles import all_labeled_graphs, brute_induced_embedding, random_graph


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def subset_oracle(g, names, min_size=5):
    """True iff some vertex subset induces a family member named in names."""
    for size in range(min_size, g.n + 1):
        for sub in combinations(range(g.n), size):
            h, _ = induced_subgraph(g, sub)
            kind = recognize_obstruction(h)
            if kind is not None and kind.name in names:
                return True
    return False


SPLIT_NAMES = {"nova", "snare"}
TF_NAMES = {"theta", "closed-theta", "wheel"}


class TestFindInduced:
    def test_net_inside_snare_avoids_dominator(self):
        host = generate(snare())
        emb = find_induced(host, generate(net()))
        assert emb is not None and emb.validate(host)
        # the dominating vertex is adjacent to everything, but the net has
        # non-adjacent pairs at every vertex, so it cannot be in the image
        assert emb.image() == (0, 1, 2, 3, 4, 5)

    def test_no_triangle_in_c6(self):
        k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert find_induced(cycle(6), k3) is None

    def test_claw_inside_nova2(self):
        host = generate(nova(2))
        claw_g = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert brute_induced_embedding(host, claw_g) is not None
        emb = find_induced(host, claw_g)
        assert emb is not None and emb.validate(host)

    def test_pattern_larger_than_host(self):
        assert find_induced(cycle(4), cycle(5)) is None

    def test_self_embedding(self):
        g = generate(snare())
        emb = find_induced(g, g)
        assert emb is not None and emb.mapping == tuple(range(7))

    def test_agrees_with_brute(self):
        rng = random.Random(23)
        patterns = [
            Graph(4, [(0, 1), (0, 2), (0, 3)]),
            generate(net()),
            cycle(4),
            Graph(4, [(0, 1), (1, 2), (2, 3)]),
            Graph(3, [(0, 1), (1, 2), (0, 2)]),
        ]
        for _ in range(120):
            host = random_graph(rng, rng.randint(3, 8), rng.uniform(0.2, 0.7))
            for pat in patterns:
                got = find_induced(host, pat)
                want = brute_induced_embedding(host, pat)
                assert (got is not None) == (want is not None)
                if got is not None:
                    assert got.validate(host)


class TestFindSplitObstruction:
    def test_nova3_identity(self):
        host = generate(nova(3))
        emb = find_split_obstruction(host)
        assert emb is not None and emb.kind == nova(3)
        assert emb.mapping == tuple(range(7))
        assert emb.validate(host)

    def test_k5_none(self):
        k5 = Graph(5, list(combinations(range(5), 2)))
        assert find_split_obstruction(k5) is None

    def test_dominated_nova3_yields_nova2(self):
        base = generate(nova(3))
        host = Graph(8, list(base.edges()) + [(v, 7) for v in range(7)])
        assert brute_induced_embedding(host, generate(nova(2))) is not None
        emb = find_split_obstruction(host)
        assert emb is not None and emb.kind == nova(2)
        assert emb.validate(host)

    def test_snare_identity(self):
        host = generate(snare())
        emb = find_split_obstruction(host)
        assert emb is not None and emb.kind == snare()
        assert emb.mapping == tuple(range(7))

    def test_exhaustive_small(self):
        for n in range(7):
            for g in all_labeled_graphs(n):
                emb = find_split_obstruction(g)
                assert (emb is not None) == subset_oracle(g, SPLIT_NAMES)
                if emb is not None:
                    assert emb.validate(g)

    def test_random_larger(self):
        rng = random.Random(37)
        for _ in range(150):
            g = random_graph(rng, rng.randint(8, 10), rng.uniform(0.3, 0.8))
            emb = find_split_obstruction(g)
            assert (emb is not None) == subset_oracle(g, SPLIT_NAMES)
            if emb is not None:
                assert emb.validate(g)


class TestFindTfObstruction:
    def test_k23_is_theta(self):
        host = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        emb = find_tf_obstruction(host)
        assert emb is not None and emb.kind == theta(2, 2, 2)
        assert emb.validate(host)

    def test_chordless_cycles_have_none(self):
        assert find_tf_obstruction(cycle(7)) is None
        assert find_tf_obstruction(cycle(6)) is None
        assert find_tf_obstruction(cycle(4)) is None

    def test_alternating_hub_wheel(self):
        rim = [(i, (i + 1) % 6) for i in range(6)]
        host = Graph(7, rim + [(0, 6), (2, 6), (4, 6)])
        emb = find_tf_obstruction(host)
        assert emb is not None and emb.kind == wheel(6, [0, 2, 4])
        assert emb.validate(host)
        # agreement with the generic embedder on the named pattern
        assert find_induced(host, generate(emb.kind)) is not None

    def test_triangle_host_rejected(self):
        k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(PreconditionError):
            find_tf_obstruction(k3)

    def test_closed_theta_identity(self):
        host = generate(closed_theta(3, 3, 3))
        emb = find_tf_obstruction(host)
        assert emb is not None and emb.kind == closed_theta(3, 3, 3)
        assert emb.mapping == tuple(range(8))

    def test_theta_identity(self):
        host = generate(theta(2, 3, 3))
        emb = find_tf_obstruction(host)
        assert emb is not None and emb.kind == theta(2, 3, 3)
        assert emb.mapping == tuple(range(7))

    def test_k33(self):
        host = Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        emb = find_tf_obstruction(host)
        assert emb is not None and emb.kind == theta(2, 2, 2)
        assert emb.validate(host)

    def test_exhaustive_small(self):
        for n in range(7):
            for g in all_labeled_graphs(n):
                if not is_triangle_free(g)[0]:
                    continue
                emb = find_tf_obstruction(g)
                assert (emb is not None) == subset_oracle(g, TF_NAMES)
                if emb is not None:
                    assert emb.validate(g)
                    assert find_induced(g, generate(emb.kind)) is not None

    def test_random_larger(self):
        rng = random.Random(53)
        done = 0
        while done < 120:
            n = rng.randint(8, 10)
            g = random_graph(rng, n, rng.uniform(0.15, 0.35))
            if not is_triangle_free(g)[0]:
                continue
            done += 1
            emb = find_tf_obstruction(g)
            assert (emb is not None) == subset_oracle(g, TF_NAMES)
            if emb is not None:
                assert emb.validate(g)
                assert find_induced(g, generate(emb.kind)) is not None


class TestEmbeddingValidate:
    def test_rejects_tampering(self):
        host = generate(snare())
        emb = find_split_obstruction(host)
        assert emb.validate(host)
        assert not Embedding(emb.pattern, emb.mapping[:-1] + (0,), emb.kind).validate(host)
        assert not Embedding(emb.pattern, tuple(reversed(emb.mapping)), emb.kind).validate(host)

    def test_rejects_kind_pattern_mismatch(self):
        host = generate(nova(2))
        emb = find_split_obstruction(host)
        assert emb.kind == nova(2)
        assert not Embedding(emb.pattern, emb.mapping, nova(3)).validate(host)
