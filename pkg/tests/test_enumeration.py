import pytest
from hypothesis import given, settings

from chip_diffusion import (
    Graph,
    SearchStatus,
    SearchWitness,
    VertexSet,
    all_graphs,
    complete,
    count_zero2_subsets,
    domination_number,
    find_zero_not_zero2,
    graph_from_edge_mask,
    is_ccd,
    is_zero2_invoking,
    is_zero_invoking,
    path,
    search_all_graphs,
)
from chip_diffusion import enumeration
from chip_diffusion.enumeration import (
    SearchProgress,
    all_edge_pairs,
    canonical_edge_mask,
)

import naive
from strategies import graphs

# Labelled connected graph counts for n = 1..5, derived by the brute-force
# connectivity scan below (test_connected_counts re-derives them).
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728}


class TestCount:
    @pytest.mark.parametrize("n,expected", [(1, 2), (2, 4), (3, 4), (5, 8)])
    def test_path_counts(self, n, expected):
        assert count_zero2_subsets(path(n), include_trivial=True) == expected

    def test_rigid_six_has_only_trivial(self, rigid_six):
        assert count_zero2_subsets(rigid_six, include_trivial=False) == 0
        assert count_zero2_subsets(rigid_six, include_trivial=True) == 2

    def test_exclude_trivial_drops_two(self):
        g = path(5)
        assert count_zero2_subsets(g, include_trivial=False) == 6

    @given(graphs(max_n=7))
    @settings(max_examples=150)
    def test_matches_per_subset_predicates(self, g):
        # The inlined counting loop against both independent predicates.
        by_ccd = sum(1 for m in range(1 << g.n) if is_ccd(g, VertexSet(g.n, m)))
        by_dynamic = sum(
            1 for m in range(1 << g.n) if is_zero2_invoking(g, VertexSet(g.n, m))
        )
        assert count_zero2_subsets(g) == by_ccd == by_dynamic

    @pytest.mark.parametrize("n", range(1, 16))
    def test_path_oracle_agreement(self, n):
        # Structural count vs the two-firing definition, full agreement.
        g = path(n)
        dynamic = sum(
            1 for m in range(1 << n) if is_zero2_invoking(g, VertexSet(n, m))
        )
        assert count_zero2_subsets(g) == dynamic

    @given(graphs(min_n=1, max_n=7))
    def test_count_is_even(self, g):
        # Complement closure pairs the subsets; h never equals its complement.
        assert count_zero2_subsets(g) % 2 == 0

    def test_refuses_oversize(self):
        with pytest.raises(ValueError, match="exhaustive"):
            count_zero2_subsets(Graph(27))


class TestDominationNumber:
    def test_path6(self):
        assert domination_number(path(6)) == 2

    def test_rigid_six(self, rigid_six):
        assert domination_number(rigid_six) == 2

    def test_complete(self):
        assert domination_number(complete(5)) == 1

    @pytest.mark.parametrize("n", range(1, 19))
    def test_paths_match_ceiling_third(self, n):
        assert domination_number(path(n)) == -(-n // 3)

    def test_empty_graph(self):
        assert domination_number(Graph(0)) == 0

    @given(graphs(max_n=7))
    def test_matches_naive_scan(self, g):
        adj = naive.adjacency(g.n, g.edges)
        best = min(
            (bin(m).count("1") for m in range(1 << g.n)
             if naive.dominating(adj, {v for v in range(g.n) if m >> v & 1})),
            default=0,
        )
        assert domination_number(g) == best


def reverify_witness(w: SearchWitness) -> None:
    """Independent re-simulation of a claimed witness."""
    adj = naive.adjacency(w.graph.n, w.graph.edges)
    subset = set(w.subset.members)
    kind, detail = naive.zero_invoking_outcome(adj, subset)
    assert kind == "reached_zero" and detail == w.zero_step
    assert w.zero_step >= 3
    assert not naive.zero2_invoking(adj, subset)


class TestFindZeroNotZero2:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_paths_internally_consistent(self, n):
        result = find_zero_not_zero2(path(n))
        assert result is not SearchStatus.INCONCLUSIVE
        if isinstance(result, SearchWitness):
            reverify_witness(result)

    def test_trivial_subsets_never_qualify(self):
        g = complete(4)
        for h in (VertexSet(4, 0), VertexSet(4, g.full_mask)):
            out = is_zero_invoking(g, h)
            assert out.reached_zero and out.step == 0
            assert is_zero2_invoking(g, h)

    def test_inconclusive_under_tiny_cap(self):
        assert find_zero_not_zero2(path(4), max_steps=1) is SearchStatus.INCONCLUSIVE

    @given(graphs(max_n=5))
    @settings(max_examples=60, deadline=None)
    def test_any_witness_reverifies(self, g):
        result = find_zero_not_zero2(g, max_steps=2000)
        if isinstance(result, SearchWitness):
            reverify_witness(result)


class TestGraphCensus:
    def test_edge_pair_order(self):
        assert all_edge_pairs(4) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

    def test_mask_bit_maps_to_pair(self):
        g = graph_from_edge_mask(4, 0b000101)
        assert g.edges == ((0, 1), (0, 3))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_total_counts(self, n):
        assert sum(1 for _ in all_graphs(n)) == 1 << (n * (n - 1) // 2)

    @pytest.mark.parametrize("n", sorted(CONNECTED_COUNTS))
    def test_connected_counts(self, n):
        got = sum(1 for _ in all_graphs(n, connected_only=True))
        assert got == CONNECTED_COUNTS[n]

    def test_connected_classes_of_order_four(self):
        # 38 labelled connected graphs collapse to 6 isomorphism classes.
        canon = {canonical_edge_mask(g) for _, g in all_graphs(4, connected_only=True)}
        assert len(canon) == 6

    def test_canonical_invariant_under_relabelling(self):
        g = path(4)
        relabelled = Graph(4, [(3, 2), (2, 0), (0, 1)])
        assert canonical_edge_mask(g) == canonical_edge_mask(relabelled)
        assert canonical_edge_mask(g) != canonical_edge_mask(complete(4))


class _Interrupt(Exception):
    pass


class TestSearchAllGraphs:
    def test_n2_finds_nothing(self):
        assert list(search_all_graphs(2)) == []

    def test_n4_connected_golden(self):
        # Frozen by the independent dict-based scan: no witnesses exist.
        witnesses = list(search_all_graphs(4, connected_only=True))
        assert witnesses == []

    def test_reporter_progress_is_monotone(self):
        events: list[SearchProgress] = []
        list(search_all_graphs(3, reporter=events.append))
        assert events
        assert events[-1].scanned == events[-1].total == 8
        assert all(a.scanned < b.scanned for a, b in zip(events, events[1:]))

    def test_refuses_oversize(self):
        with pytest.raises(ValueError):
            next(iter(search_all_graphs(8)))

    def test_checkpoint_interrupt_and_resume(self, tmp_path, monkeypatch):
        monkeypatch.setattr(enumeration, "_CHUNK", 8)
        ckpt = tmp_path / "scan.ckpt"
        seen_ranges = []

        def stop_after_three(p: SearchProgress):
            seen_ranges.append(p.scanned)
            if len(seen_ranges) == 3:
                raise _Interrupt

        with pytest.raises(_Interrupt):
            list(
                search_all_graphs(
                    4, reporter=stop_after_three, checkpoint=ckpt, connected_only=True
                )
            )
        assert ckpt.read_text().strip().splitlines()[-1] == "4 23"

        resumed_events = []
        resumed = list(
            search_all_graphs(
                4,
                reporter=resumed_events.append,
                checkpoint=ckpt,
                resume=True,
                connected_only=True,
            )
        )
        assert resumed == list(search_all_graphs(4, connected_only=True))[3:]  # both empty
        assert resumed_events[0].scanned == 32  # picked up at mask 24
        assert resumed_events[-1].scanned == 64
        assert ckpt.read_text().strip().splitlines()[-1] == "4 63"

    def test_resume_requires_checkpoint(self):
        with pytest.raises(ValueError):
            next(iter(search_all_graphs(3, resume=True)))

    def test_resume_rejects_other_order(self, tmp_path):
        ckpt = tmp_path / "scan.ckpt"
        ckpt.write_text("5 100\n")
        with pytest.raises(ValueError, match="n=5"):
            next(iter(search_all_graphs(4, checkpoint=ckpt, resume=True)))

    def test_resume_rejects_garbage(self, tmp_path):
        ckpt = tmp_path / "scan.ckpt"
        ckpt.write_text("4 not-a-mask\n")
        with pytest.raises(ValueError, match="line 1"):
            next(iter(search_all_graphs(4, checkpoint=ckpt, resume=True)))

    def test_flush_interval_writes_lines(self, tmp_path, monkeypatch):
        monkeypatch.setattr(enumeration, "_CHUNK", 8)
        monkeypatch.setattr(enumeration, "CHECKPOINT_FLUSH_INTERVAL", 16)
        ckpt = tmp_path / "scan.ckpt"
        list(search_all_graphs(4, checkpoint=ckpt))
        lines = ckpt.read_text().strip().splitlines()
        assert lines == ["4 15", "4 31", "4 47", "4 63", "4 63"]

    def test_workers_match_sequential(self):
        seq = list(search_all_graphs(4, connected_only=True, workers=1))
        par = list(search_all_graphs(4, connected_only=True, workers=2))
        assert seq == par

    def test_iso_filter_same_conclusion(self):
        plain = list(search_all_graphs(4, connected_only=True))
        filtered = list(search_all_graphs(4, connected_only=True, iso_filter=True))
        assert bool(plain) == bool(filtered)

    def test_iso_filter_rejects_checkpointing(self, tmp_path):
        with pytest.raises(ValueError):
            next(
                iter(
                    search_all_graphs(
                        3, iso_filter=True, checkpoint=tmp_path / "x", resume=False
                    )
                )
            )

    def test_witness_pipeline(self, monkeypatch):
        # No real witness is known (that existence is the open question), so
        # fake the per-graph search to exercise emission, ordering, and the
        # checkpoint bookkeeping around yields.
        fake_hits = {5: (1, 4, "fabricated"), 6: (2, 7, "fabricated")}

        def fake_find(g, max_steps=0):
            pairs = all_edge_pairs(g.n)
            mask = 0
            for i, p in enumerate(pairs):
                if p in g.edges:
                    mask |= 1 << i
            if mask in fake_hits:
                smask, step, note = fake_hits[mask]
                return SearchWitness(g, VertexSet(g.n, smask), step, note)
            return SearchStatus.NOT_FOUND

        monkeypatch.setattr(enumeration, "find_zero_not_zero2", fake_find)
        got = list(search_all_graphs(3))
        assert [(w.subset.mask, w.zero_step) for w in got] == [(1, 4), (2, 7)]
