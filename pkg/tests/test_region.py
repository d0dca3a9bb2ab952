"""Region geometry: parsing, normalization, levels, boundaries, the left-of order."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ribbonlab import (
    Region,
    RegionFormatError,
    boundary_squares,
    gen_aztec,
    gen_random_tileable,
    gen_rectangle,
    is_tileable,
    level,
    level_profile,
    order_key,
    parse_region,
    rotate180,
    serialize_region,
)

cells_sets = st.sets(
    st.tuples(st.integers(-8, 8), st.integers(-8, 8)), min_size=1, max_size=20
)


def brute_left_of(a, b):
    """The left-of relation, straight from its two defining conditions."""
    (x, y), (x2, y2) = a, b
    if x + y == x2 + y2:
        return x < x2
    return abs((x + y) - (x2 + y2)) == 1 and x <= x2 and y >= y2


class TestParse:
    def test_square(self):
        r = parse_region("##\n##")
        assert r.area == 4
        assert level_profile(r).sigma == (1, 2, 1)

    def test_anti_diagonal_normalizes_to_level_zero(self):
        # both cells end up at level 0; the lower-right one keeps y = -1
        r = parse_region("#.\n.#")
        assert r.cells == frozenset({(0, 0), (1, -1)})
        assert level_profile(r).sigma == (2,)

    def test_main_diagonal(self):
        r = parse_region(".#\n#.")
        assert r.cells == frozenset({(0, 0), (1, 1)})
        assert level_profile(r).sigma == (1, 0, 1)

    def test_ring(self):
        r = parse_region("###\n#.#\n###")
        assert r.area == 8
        assert level_profile(r).sigma == (1, 2, 2, 2, 1)

    def test_comments_ignored(self):
        assert parse_region("% a comment\n##\n##") == parse_region("##\n##")

    def test_ragged_rows_rejected(self):
        with pytest.raises(RegionFormatError):
            parse_region("##\n#")

    def test_illegal_character_rejected(self):
        with pytest.raises(RegionFormatError):
            parse_region("#x\n##")

    def test_empty_rejected(self):
        with pytest.raises(RegionFormatError):
            parse_region("")
        with pytest.raises(RegionFormatError):
            parse_region("..\n..")


class TestSerialize:
    def test_square(self):
        assert serialize_region(gen_rectangle(2, 2)) == "##\n##"

    def test_bar(self):
        assert serialize_region(gen_rectangle(3, 1)) == "###"

    def test_ring(self):
        assert serialize_region(parse_region("###\n#.#\n###")) == "###\n#.#\n###"

    @given(cells_sets)
    @settings(max_examples=150, deadline=None)
    def test_round_trip(self, cells):
        r = Region.from_cells(cells)
        assert parse_region(serialize_region(r)) == r


class TestNormalization:
    def test_idempotent(self):
        r = gen_aztec(2)
        assert Region.from_cells(r.cells) == r

    @given(cells_sets, st.integers(-5, 5), st.integers(-5, 5))
    @settings(max_examples=150, deadline=None)
    def test_translation_invariant(self, cells, dx, dy):
        shifted = {(x + dx, y + dy) for x, y in cells}
        assert Region.from_cells(cells) == Region.from_cells(shifted)

    def test_min_level_zero(self):
        r = Region.from_cells({(3, 4), (4, 4), (3, 5)})
        assert min(level(c) for c in r.cells) == 0
        assert min(x for x, y in r.cells if x + y == 0) == 0

    def test_raw_constructor_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            Region(frozenset({(1, 0)}))
        with pytest.raises(ValueError):
            Region(frozenset())


class TestLevelProfile:
    def test_rect_3x4(self):
        assert level_profile(gen_rectangle(4, 3)).sigma == (1, 2, 3, 3, 2, 1)

    @given(cells_sets)
    @settings(max_examples=100, deadline=None)
    def test_sigma_sums_to_area(self, cells):
        r = Region.from_cells(cells)
        assert sum(level_profile(r).sigma) == r.area


class TestBoundary:
    @staticmethod
    def brute(region, l):
        out = set()
        for x, y in region.cells:
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb not in region.cells and nb[0] + nb[1] == l:
                    out.add(nb)
        return out

    def test_square_level0(self):
        r = gen_rectangle(2, 2)
        assert boundary_squares(r, 0) == {(1, -1), (-1, 1)}
        assert boundary_squares(r, 0) == self.brute(r, 0)

    def test_square_level1_empty(self):
        assert boundary_squares(gen_rectangle(2, 2), 1) == frozenset()

    def test_single_cell(self):
        r = Region.from_cells({(0, 0)})
        assert boundary_squares(r, 1) == {(1, 0), (0, 1)}

    @given(cells_sets, st.integers(-2, 12))
    @settings(max_examples=100, deadline=None)
    def test_matches_neighborhood_scan(self, cells, l):
        r = Region.from_cells(cells)
        assert boundary_squares(r, l) == self.brute(r, l)


class TestOrderKey:
    def test_examples(self):
        assert order_key((0, 1), 0) == 0
        assert order_key((0, 0), 0) == 1
        assert order_key((1, 0), 0) == 2

    def test_level_outside_band_rejected(self):
        with pytest.raises(ValueError):
            order_key((1, 1), 0)

    def test_reproduces_left_of_exhaustively(self):
        for lower in (-2, 0, 3):
            band = []
            for x in range(-3, 5):
                band.append((x, lower - x))
                band.append((x, lower + 1 - x))
            for a in band:
                for b in band:
                    if a == b:
                        continue
                    assert (order_key(a, lower) < order_key(b, lower)) == brute_left_of(a, b)

    def test_consecutive_keys_are_adjacent(self):
        lower = 2
        by_key = {}
        for x in range(-3, 5):
            for c in ((x, lower - x), (x, lower + 1 - x)):
                by_key[order_key(c, lower)] = c
        for k, c in by_key.items():
            if k + 1 in by_key:
                x, y = c
                x2, y2 = by_key[k + 1]
                assert abs(x - x2) + abs(y - y2) == 1


class TestGenerators:
    def test_rectangle(self):
        assert gen_rectangle(2, 2).cells == frozenset({(0, 0), (0, 1), (1, 0), (1, 1)})
        with pytest.raises(ValueError):
            gen_rectangle(0, 3)

    def test_aztec_order1_is_square(self):
        assert gen_aztec(1) == gen_rectangle(2, 2)

    def test_aztec_area(self):
        for k in (1, 2, 3, 4):
            assert gen_aztec(k).area == 2 * k * (k + 1)

    def test_random_tileable(self):
        r = gen_random_tileable(3, 4, seed=7)
        assert r.area == 12
        assert is_tileable(r, 3)

    def test_random_deterministic_in_seed(self):
        assert gen_random_tileable(4, 5, seed=11) == gen_random_tileable(4, 5, seed=11)
        assert gen_random_tileable(4, 5, seed=11) != gen_random_tileable(4, 5, seed=12)


def test_rotate180_preserves_area_and_profile_reverses():
    r = parse_region("###\n#..")
    rr = rotate180(r)
    assert rr.area == r.area
    assert level_profile(rr).sigma == tuple(reversed(level_profile(r).sigma))
