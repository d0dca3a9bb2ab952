"""Counting engines: DFS, frontier DP, tileability, stream contracts."""

import pytest

from ribbonlab import (
    MemoCapacityError,
    Region,
    compute_tau,
    count_dfs,
    count_frontier_dp,
    encode_roots,
    enumerate_tilings,
    gen_aztec,
    gen_rectangle,
    is_tileable,
    level,
    level_profile,
    parse_region,
    validate_tiling,
)
from domino_oracle import domino_count

RING = parse_region("###\n#.#\n###")


class TestCounts:
    @pytest.mark.parametrize(
        "region,n,expected",
        [
            (gen_rectangle(2, 2), 2, 2),
            (gen_rectangle(3, 3), 3, 6),
            (gen_rectangle(4, 4), 4, 24),
            (gen_rectangle(3, 2), 2, 3),
            (RING, 2, 2),
            (gen_aztec(2), 2, 8),
            (gen_rectangle(2, 1), 3, 0),
        ],
    )
    def test_known_counts_both_engines(self, region, n, expected):
        assert count_dfs(region, n).count == expected
        assert count_frontier_dp(region, n).count == expected

    def test_matches_transfer_matrix_on_rectangles(self):
        for w, h in ((2, 2), (4, 4), (4, 3), (6, 5), (7, 4)):
            assert count_frontier_dp(gen_rectangle(w, h), 2).count == domino_count(w, h)

    def test_n_below_two_rejected(self):
        with pytest.raises(ValueError):
            count_dfs(gen_rectangle(2, 2), 1)
        with pytest.raises(ValueError):
            count_frontier_dp(gen_rectangle(2, 2), 1)


class TestStream:
    def test_empty_when_area_indivisible(self):
        assert list(enumerate_tilings(gen_rectangle(2, 1), 3)) == []

    def test_length_matches_count(self):
        for region, n in ((gen_rectangle(4, 3), 2), (gen_rectangle(3, 3), 3), (RING, 2)):
            tilings = list(enumerate_tilings(region, n))
            assert len(tilings) == count_dfs(region, n).count

    def test_each_tiling_valid_and_distinct(self):
        region, n = gen_rectangle(4, 3), 2
        seen = set()
        for t in enumerate_tilings(region, n):
            assert validate_tiling(t, n)
            roots = encode_roots(t).roots
            assert roots not in seen
            seen.add(roots)

    def test_lexicographic_root_order(self):
        for region, n in ((gen_rectangle(4, 3), 2), (gen_aztec(2), 2), (gen_rectangle(3, 3), 3)):
            keys = [
                tuple(sorted((level(c), c[0]) for c in encode_roots(t).roots))
                for t in enumerate_tilings(region, n)
            ]
            assert keys == sorted(keys)

    def test_deterministic(self):
        a = [encode_roots(t).roots for t in enumerate_tilings(gen_aztec(2), 2)]
        b = [encode_roots(t).roots for t in enumerate_tilings(gen_aztec(2), 2)]
        assert a == b

    def test_root_counts_match_tau(self):
        region, n = gen_rectangle(3, 3), 3
        tau = compute_tau(level_profile(region), n).tau
        for t in enumerate_tilings(region, n):
            counts = [0] * (region.max_level + 1)
            for r in t.ribbons:
                counts[r.level] += 1
            assert tuple(counts) == tau


class TestFrontierDP:
    def test_agrees_with_dfs(self, corpus):
        for entry in corpus[:60]:
            assert (
                count_frontier_dp(entry.region, entry.n).count
                == count_dfs(entry.region, entry.n).count
            )

    def test_memo_cap_raises(self):
        with pytest.raises(MemoCapacityError):
            count_frontier_dp(gen_rectangle(6, 2), 2, memo_cap=1)

    def test_memo_cap_env(self, monkeypatch):
        monkeypatch.setenv("RIBBONLAB_MEMO_CAP", "1")
        with pytest.raises(MemoCapacityError):
            count_frontier_dp(gen_rectangle(6, 2), 2)
        monkeypatch.setenv("RIBBONLAB_MEMO_CAP", "junk")
        with pytest.raises(ValueError):
            count_frontier_dp(gen_rectangle(6, 2), 2)

    def test_reports_peak_states(self):
        result = count_frontier_dp(gen_rectangle(8, 8), 2)
        assert result.count == domino_count(8, 8)
        assert result.peak_states >= 2
        assert result.nodes_explored > 0


class TestThreads:
    def test_thread_count_does_not_change_result(self):
        region = gen_rectangle(5, 4)
        seq = count_dfs(region, 2)
        for threads in (2, 4):
            par = count_dfs(region, 2, threads=threads)
            assert par.count == seq.count
            assert par.nodes_explored == seq.nodes_explored

    def test_threads_on_untileable(self):
        assert count_dfs(gen_rectangle(2, 2), 4, threads=4).count == 0


class TestIsTileable:
    def test_bars(self):
        for n in (2, 3, 5):
            assert is_tileable(gen_rectangle(n, 1), n)

    def test_l_tromino(self):
        assert not is_tileable(Region.from_cells({(0, 0), (1, 0), (0, 1)}), 3)

    def test_divisibility(self):
        assert not is_tileable(gen_rectangle(2, 2), 3)

    def test_feasible_tau_but_untileable(self):
        # two far-apart cells at levels 0 and 1: tau = (1, 0) checks out but
        # no domino connects them
        assert not is_tileable(Region.from_cells({(0, 0), (2, -1)}), 2)

    def test_disconnected_tileable(self):
        r = Region.from_cells({(0, 0), (1, 0), (5, 5), (5, 6)})
        assert is_tileable(r, 2)
        assert count_dfs(r, 2).count == 1
