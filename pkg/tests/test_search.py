import itertools

import pytest

import naive_graph as ng
from conftest import to_naive
from lcgraph import (
    BellPairTarget,
    BudgetExceeded,
    Graph,
    MeasurementSequence,
    MeasurementStep,
    OrbitCapExceeded,
    PauliBasis,
    apply_leaf_axil_reduction,
    can_extract_bell_pairs,
    enumerate_graphs,
    is_lc_equivalent,
    is_vertex_minor,
    lc_orbit,
)


def edge_sets(graphs):
    return {frozenset(g.edges()) for g in graphs}


def _random_instance(rng, n_max, n_min=2):
    n = rng.randint(n_min, n_max)
    labels = range(1, n + 1)
    g = Graph.from_edges(
        labels, [e for e in itertools.combinations(labels, 2) if rng.random() < 0.5]
    )
    k = rng.randint(1, n)
    subset = sorted(rng.sample(list(labels), k))
    h = Graph.from_edges(
        subset, [e for e in itertools.combinations(subset, 2) if rng.random() < 0.5]
    )
    return g, h


class TestLcOrbit:
    def test_k2_orbit_is_itself(self):
        k2 = Graph.from_edges([1, 2], [(1, 2)])
        assert lc_orbit(k2) == frozenset([k2])

    def test_line3_orbit(self):
        # the three labeled paths plus the triangle
        got = edge_sets(lc_orbit(Graph.line(3)))
        assert got == {
            frozenset({(1, 2), (2, 3)}),
            frozenset({(1, 2), (1, 3)}),
            frozenset({(1, 3), (2, 3)}),
            frozenset({(1, 2), (1, 3), (2, 3)}),
        }

    def test_triangle_shares_the_orbit(self):
        assert lc_orbit(Graph.complete(3)) == lc_orbit(Graph.line(3))

    def test_cap_exceeded(self):
        with pytest.raises(OrbitCapExceeded):
            lc_orbit(Graph.line(3), cap=2)

    def test_cap_validation(self):
        with pytest.raises(ValueError):
            lc_orbit(Graph.line(3), cap=0)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_oracle_orbits(self, n):
        for g in enumerate_graphs(n):
            want = {
                frozenset(tuple(sorted(e)) for e in ng.edge_set(d))
                for d in ng.orbit(to_naive(g)).values()
            }
            assert edge_sets(lc_orbit(g)) == want


class TestIsLcEquivalent:
    def test_single_step_reachability(self):
        g = Graph.ring(5)
        for v in g.vertices:
            assert is_lc_equivalent(g, g.local_complement(v))

    def test_line3_triangle(self):
        assert is_lc_equivalent(Graph.line(3), Graph.complete(3))

    def test_component_counts_differ(self):
        pairs = Graph.from_edges([1, 2, 3, 4], [(1, 2), (3, 4)])
        assert not is_lc_equivalent(pairs, Graph.line(4))

    def test_vertex_set_mismatch(self):
        with pytest.raises(ValueError, match="vertex sets"):
            is_lc_equivalent(Graph.line(3), Graph.line(4))

    @pytest.mark.parametrize("n", [2, 3])
    def test_equivalence_relation_small(self, n):
        graphs = list(enumerate_graphs(n))
        for g in graphs:
            assert is_lc_equivalent(g, g)
        for g, h in itertools.combinations(graphs, 2):
            ghe = is_lc_equivalent(g, h)
            assert ghe == is_lc_equivalent(h, g)
        # transitivity via orbit partition: orbits are identical or disjoint
        orbits = [lc_orbit(g) for g in graphs]
        for a, b in itertools.combinations(orbits, 2):
            assert a == b or not (a & b)

    @pytest.mark.parametrize("n", [4, 5])
    def test_equivalence_relation_exhaustive(self, n):
        # every member of every orbit reproduces the same orbit, which pins
        # reflexivity, symmetry, and transitivity over all graphs at once
        seen: set = set()
        for g in enumerate_graphs(n):
            if g in seen:
                continue
            orbit = lc_orbit(g)
            assert g in orbit
            for h in orbit:
                assert lc_orbit(h) == orbit
            seen |= orbit


class TestBellPairTarget:
    def test_canonical_ordering(self):
        t = BellPairTarget((5, 2), (4, 1))
        assert t.pair_a == (1, 4) and t.pair_b == (2, 5)

    def test_patterns(self):
        assert BellPairTarget((1, 3), (2, 4)).pattern == "crossing"
        assert BellPairTarget((1, 4), (2, 3)).pattern == "nested"
        assert BellPairTarget((1, 2), (3, 4)).pattern == "disjoint"
        assert BellPairTarget((1, 3), (2, 4)).is_crossing

    def test_distinct_labels_required(self):
        with pytest.raises(ValueError, match="distinct"):
            BellPairTarget((1, 2), (2, 3))

    def test_as_graph(self):
        t = BellPairTarget((2, 4), (1, 5))
        g = t.as_graph()
        assert g.vertices == (1, 2, 4, 5)
        assert set(g.edges()) == {(1, 5), (2, 4)}


class TestMeasurementSequence:
    def test_apply_replays(self):
        seq = MeasurementSequence(
            (MeasurementStep(3, PauliBasis.Z), MeasurementStep(6, PauliBasis.Z))
        )
        assert seq.apply(Graph.line(6)).vertices == (1, 2, 4, 5)

    def test_rejects_repeated_vertex(self):
        with pytest.raises(ValueError, match="repeats"):
            MeasurementSequence((MeasurementStep(1, PauliBasis.Z), MeasurementStep(1, PauliBasis.Y)))


class TestLeafAxilReduction:
    def test_leaf_case(self):
        got = apply_leaf_axil_reduction(Graph.line(3), {2, 3}, 1)
        assert got == Graph.from_edges([2, 3], [(2, 3)])

    def test_axil_case(self):
        got = apply_leaf_axil_reduction(Graph.line(3), {1, 3}, 2)
        assert got == Graph.from_edges([1, 3], [(1, 3)])

    def test_axil_equals_x_measurement_with_leaf(self):
        g = Graph.from_edges([1, 2, 3, 4], [(1, 2), (2, 3), (2, 4), (3, 4)])
        assert apply_leaf_axil_reduction(g, {1, 3, 4}, 2) == g.measure(2, "X", neighbor=1)

    def test_target_vertex_rejected(self):
        with pytest.raises(ValueError, match="target"):
            apply_leaf_axil_reduction(Graph.line(3), {2, 3}, 3)

    def test_neither_leaf_nor_axil(self):
        with pytest.raises(ValueError, match="neither"):
            apply_leaf_axil_reduction(Graph.ring(5), {1, 2}, 4)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_preserves_vertex_minor_answer(self, n):
        # reduced instance answers exactly like the original, for every target
        # without isolated vertices (the regime where the reduction is exact)
        for g in enumerate_graphs(n):
            for v in g.vertices:
                h_labels = set(g.vertices) - {v}
                deg = g.degree(v)
                reducible = deg == 1 or any(
                    g.neighbor_mask(u) == 1 << v for u in g.neighbors(v)
                )
                if not reducible:
                    continue
                reduced = apply_leaf_axil_reduction(g, h_labels, v)
                subset = sorted(h_labels)
                for h in enumerate_graphs(len(subset)):
                    if not all(h.rows):
                        continue
                    relabel = dict(zip(h.vertices, subset))
                    hh = Graph.from_edges(
                        subset, [(relabel[a], relabel[b]) for a, b in h.edges()]
                    )
                    a = is_vertex_minor(g, hh, prune=False).decision
                    b = is_vertex_minor(reduced, hh, prune=False).decision
                    assert a == b

    def test_isolated_target_vertices_void_the_reduction(self):
        # X on the leaf 3 isolates its axil 1, reaching the edgeless target;
        # the leaf-deleted graph cannot, so pruning must skip such targets
        g = Graph.from_edges([1, 2, 3], [(1, 2), (1, 3)])
        h = Graph.empty([1, 2])
        assert g.measure(3, "X") == h
        assert is_vertex_minor(g, h).decision
        assert not is_vertex_minor(g.delete_vertex(3), h).decision


class TestIsVertexMinor:
    def test_equal_graphs_empty_sequence(self):
        g = Graph.ring(5)
        rep = is_vertex_minor(g, g)
        assert rep.decision and len(rep.witness.measurements) == 0
        assert rep.witness.lc_path == ()

    def test_line3_to_bell_pair(self):
        h = Graph.from_edges([1, 3], [(1, 3)])
        rep = is_vertex_minor(Graph.line(3), h)
        assert rep.decision
        assert rep.witness.replay(Graph.line(3)) == h

    def test_first_in_order_witness(self):
        # unpruned, bases enumerate as Z, Y, X: Z at 2 disconnects 1 from 3,
        # so the first (and recorded) hit is the Y measurement
        h = Graph.from_edges([1, 3], [(1, 3)])
        rep = is_vertex_minor(Graph.line(3), h, prune=False)
        assert [s.as_dict() for s in rep.witness.measurements] == [{"vertex": 2, "basis": "Y"}]
        assert rep.witness.lc_path == ()
        # pruned, the axil reduction supplies the equivalent X witness up front
        pruned = is_vertex_minor(Graph.line(3), h)
        assert [s.as_dict() for s in pruned.witness.measurements] == [
            {"vertex": 2, "basis": "X", "neighbor": 1}
        ]
        assert pruned.witness.replay(Graph.line(3)) == h

    def test_empty_target_graph(self):
        rep = is_vertex_minor(Graph.ring(4), Graph.empty())
        assert rep.decision
        assert sorted(s.vertex for s in rep.witness.measurements) == [1, 2, 3, 4]
        assert rep.witness.replay(Graph.ring(4)) == Graph.empty()

    def test_crossing_on_ring6_is_out(self):
        rep = can_extract_bell_pairs(Graph.ring(6), BellPairTarget((1, 3), (2, 4)))
        assert not rep.decision and rep.witness is None

    def test_disjoint_on_line6(self):
        rep = can_extract_bell_pairs(Graph.line(6), BellPairTarget((1, 2), (4, 5)))
        assert rep.decision

    def test_target_off_host_labels(self):
        with pytest.raises(ValueError, match="absent"):
            is_vertex_minor(Graph.line(3), Graph.from_edges([7, 8], [(7, 8)]))

    def test_missing_target_vertex(self):
        with pytest.raises(ValueError, match="not in graph"):
            can_extract_bell_pairs(Graph.line(4), BellPairTarget((1, 2), (3, 9)))

    def test_budget_exceeded_is_an_error(self):
        with pytest.raises(BudgetExceeded):
            can_extract_bell_pairs(
                Graph.ring(8), BellPairTarget((1, 3), (5, 7)), budget=3
            )

    def test_component_prune_matches_unpruned(self):
        g = Graph.from_edges([1, 2, 3, 4, 5], [(1, 2), (3, 4), (4, 5)])
        h = Graph.from_edges([1, 3], [(1, 3)])
        pruned = is_vertex_minor(g, h)
        assert pruned.stats.component_pruned and not pruned.decision
        assert not is_vertex_minor(g, h, prune=False).decision

    def test_decision_independent_of_measure_order(self, rng):
        g = Graph.ring(6)
        for target in [BellPairTarget((1, 3), (2, 4)), BellPairTarget((1, 2), (4, 5))]:
            h = target.as_graph()
            missing = tuple(v for v in g.vertices if not h.has_vertex(v))
            asc = is_vertex_minor(g, h, measure_order=missing)
            desc = is_vertex_minor(g, h, measure_order=missing[::-1])
            assert asc.decision == desc.decision
        for _ in range(40):
            g, h = _random_instance(rng, 6)
            missing = tuple(v for v in g.vertices if not h.has_vertex(v))
            asc = is_vertex_minor(g, h, measure_order=missing)
            desc = is_vertex_minor(g, h, measure_order=missing[::-1])
            assert asc.decision == desc.decision

    def test_measure_order_validation(self):
        g, h = Graph.line(4), Graph.from_edges([1, 2], [(1, 2)])
        with pytest.raises(ValueError, match="measure_order"):
            is_vertex_minor(g, h, measure_order=(3,))

    def test_invariant_under_lc_of_host(self, rng):
        g = Graph.ring(6)
        members = sorted(lc_orbit(g), key=lambda m: m.edges())
        sample = [g.local_complement(v) for v in g.vertices]
        sample += rng.sample(members, 15)
        for target in [BellPairTarget((1, 3), (2, 4)), BellPairTarget((2, 4), (1, 5))]:
            h = target.as_graph()
            want = is_vertex_minor(g, h).decision
            for member in sample:
                assert is_vertex_minor(member, h).decision == want

    def test_stats_are_populated(self):
        rep = can_extract_bell_pairs(Graph.line(6), BellPairTarget((1, 2), (4, 5)))
        s = rep.stats
        assert s.orbit_size == 1  # two disjoint edges admit no non-trivial complementation
        assert s.sequences_tried >= 1
        assert s.work > 0 and s.budget > 0

    def test_matches_definitional_oracle_random(self, rng):
        # larger sizes than the exhaustive sweep reaches, against the pure
        # reachability definition (closure under complementations/deletions)
        for n_max, count in ((5, 150), (6, 40)):
            for _ in range(count):
                g, h = _random_instance(rng, n_max, n_min=n_max)
                want = ng.is_vertex_minor_def(to_naive(g), to_naive(h))
                rep = is_vertex_minor(g, h)
                assert rep.decision == want
                if rep.decision:
                    assert rep.witness.replay(g) == h

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_definitional_oracle_exhaustive(self, n):
        # every host graph on 1..n, every target on every non-empty label subset
        for g in enumerate_graphs(n):
            d = to_naive(g)
            for k in range(1, n + 1):
                for subset in itertools.combinations(g.vertices, k):
                    for h in enumerate_graphs(k):
                        relabel = dict(zip(h.vertices, subset))
                        hh = Graph.from_edges(
                            subset, [(relabel[a], relabel[b]) for a, b in h.edges()]
                        )
                        want = ng.is_vertex_minor_def(d, to_naive(hh))
                        rep = is_vertex_minor(g, hh)
                        assert rep.decision == want
                        if rep.decision:
                            assert rep.witness.replay(g) == hh


class TestWitnesses:
    def test_witness_contains_reduction_steps(self):
        # line 1-2-3-4-5, target on {3,4}: ends get eaten by leaf reductions
        h = Graph.from_edges([3, 4], [(3, 4)])
        rep = is_vertex_minor(Graph.line(5), h)
        assert rep.decision
        assert rep.stats.leaf_reductions > 0
        verts = [s.vertex for s in rep.witness.measurements]
        assert sorted(verts) == [1, 2, 5]
        assert rep.witness.replay(Graph.line(5)) == h

    def test_witness_replay_on_random_instances(self, rng):
        hits = lc_paths = 0
        for _ in range(300):
            g, h = _random_instance(rng, 6)
            rep = is_vertex_minor(g, h)
            if rep.decision:
                hits += 1
                lc_paths += bool(rep.witness.lc_path)
                assert rep.witness.replay(g) == h
        assert hits > 0
        assert lc_paths > 0  # the complementation-path machinery gets exercised


class TestXNeighborChoice:
    @pytest.mark.parametrize("n", [3, 4])
    def test_choices_are_lc_equivalent_exhaustive(self, n):
        for g in enumerate_graphs(n):
            for v in g.vertices:
                ws = g.neighbors(v)
                if len(ws) < 2:
                    continue
                first = g.measure(v, "X", ws[0])
                for w in ws[1:]:
                    assert is_lc_equivalent(first, g.measure(v, "X", w))
