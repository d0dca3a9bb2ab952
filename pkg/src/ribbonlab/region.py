"""Lattice region geometry: cells, levels, boundary squares, the left-of order.

A cell is the unit square with lower-left corner (x, y); its level is x + y.
Regions are stored in a translation-canonical form so that every derived
quantity is independent of where the input happened to sit on the lattice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Cell = tuple[int, int]

_COMMENT = "%"


class RegionFormatError(ValueError):
    """Raised when a region file does not follow the .rgn grid format."""


def level(cell: Cell) -> int:
    """Diagonal index x + y of a cell."""
    return cell[0] + cell[1]


def order_key(cell: Cell, lower: int) -> int:
    """Integer key realizing the left-of order on the level band {lower, lower+1}.

    Cells of the upper level map to 2x, cells of the lower level to 2x + 1.
    Comparing keys reproduces the left-of relation on the band, and cells at
    consecutive keys are always edge-adjacent.
    """
    x, y = cell
    lv = x + y
    if lv == lower + 1:
        return 2 * x
    if lv == lower:
        return 2 * x + 1
    raise ValueError(f"cell {cell} has level {lv}, outside band {{{lower}, {lower + 1}}}")


@dataclass(frozen=True)
class Region:
    """A normalized finite set of unit cells.

    Canonical placement: the minimum level is 0 and the leftmost minimum-level
    cell has x = 0. Regions may be disconnected and may have holes. Build
    instances with :meth:`from_cells`, which normalizes arbitrary cell sets.
    """

    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        if not self.cells:
            raise ValueError("a region must contain at least one cell")
        lo = min(x + y for x, y in self.cells)
        lo_x = min(x for x, y in self.cells if x + y == lo)
        if lo != 0 or lo_x != 0:
            raise ValueError("cell set is not normalized; use Region.from_cells")

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Region":
        """Translate an arbitrary cell set into canonical position and wrap it."""
        cs = frozenset((int(x), int(y)) for x, y in cells)
        if not cs:
            raise ValueError("a region must contain at least one cell")
        lo = min(x + y for x, y in cs)
        dx = -min(x for x, y in cs if x + y == lo)
        dy = -lo - dx
        return cls(frozenset((x + dx, y + dy) for x, y in cs))

    @property
    def area(self) -> int:
        return len(self.cells)

    @cached_property
    def max_level(self) -> int:
        return max(x + y for x, y in self.cells)

    @cached_property
    def _by_level(self) -> dict[int, tuple[Cell, ...]]:
        rows: dict[int, list[Cell]] = {}
        for c in self.cells:
            rows.setdefault(c[0] + c[1], []).append(c)
        return {l: tuple(sorted(row)) for l, row in rows.items()}

    def level_cells(self, l: int) -> tuple[Cell, ...]:
        """Cells of level l in increasing x order (empty tuple when none)."""
        return self._by_level.get(l, ())

    @cached_property
    def _boundary_by_level(self) -> dict[int, frozenset[Cell]]:
        out: dict[int, set[Cell]] = {}
        for x, y in self.cells:
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb not in self.cells:
                    out.setdefault(nb[0] + nb[1], set()).add(nb)
        return {l: frozenset(s) for l, s in out.items()}


@dataclass(frozen=True)
class LevelProfile:
    """Per-level cell counts sigma_0..sigma_L; entries sum to the region area."""

    sigma: tuple[int, ...]


def level_profile(region: Region) -> LevelProfile:
    return LevelProfile(tuple(len(region.level_cells(l)) for l in range(region.max_level + 1)))


def boundary_squares(region: Region, l: int) -> frozenset[Cell]:
    """Cells of level l outside the region that share an edge with it."""
    return region._boundary_by_level.get(l, frozenset())


def parse_region(text: str) -> Region:
    """Parse .rgn text: '#' cells and '.' blanks on a rectangular grid.

    Lines starting with '%' are comments. The top row carries the largest y,
    the column index is x; the result is normalized, so any translated drawing
    of the same shape parses to the same Region.
    """
    rows = [line for line in text.splitlines() if not line.startswith(_COMMENT)]
    if not rows:
        raise RegionFormatError("empty region file")
    width = len(rows[0])
    height = len(rows)
    cells: set[Cell] = set()
    for i, row in enumerate(rows):
        if len(row) != width:
            raise RegionFormatError(f"row {i + 1}: length {len(row)} != {width}")
        for j, ch in enumerate(row):
            if ch == "#":
                cells.add((j, height - 1 - i))
            elif ch != ".":
                raise RegionFormatError(f"row {i + 1}: illegal character {ch!r}")
    if not cells:
        raise RegionFormatError("region has no cells")
    return Region.from_cells(cells)


def serialize_region(region: Region) -> str:
    """Inverse of parse_region: a '#'/'.' grid, top row first, no comments."""
    xs = [x for x, _ in region.cells]
    ys = [y for _, y in region.cells]
    x0, x1 = min(xs), max(xs)
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        lines.append("".join("#" if (x, y) in region.cells else "." for x in range(x0, x1 + 1)))
    return "\n".join(lines)


def rotate180(region: Region) -> Region:
    """Image of the region under the half-turn (x, y) -> (-x, -y), renormalized."""
    return Region.from_cells((-x, -y) for x, y in region.cells)


def gen_rectangle(width: int, height: int) -> Region:
    if width < 1 or height < 1:
        raise ValueError("rectangle sides must be positive")
    return Region.from_cells((x, y) for x in range(width) for y in range(height))


def gen_aztec(order: int) -> Region:
    """Aztec diamond of the given order: 2k stacked rows of lengths 2, 4, ..., 2k, ..., 4, 2."""
    if order < 1:
        raise ValueError("aztec order must be positive")
    k = order
    return Region.from_cells(
        (x, y)
        for x in range(2 * k)
        for y in range(2 * k)
        if abs(2 * x - 2 * k + 1) + abs(2 * y - 2 * k + 1) <= 2 * k
    )


def gen_random_tileable(n: int, tiles: int, seed: int) -> Region:
    """Glue `tiles` random pairwise-disjoint n-ribbons into one region.

    The first ribbon is rooted at the origin; each later root is drawn
    uniformly from the cells edge-adjacent to the region built so far, with
    a uniform step word, rejection-sampled until the ribbon is disjoint.
    Tileable by construction and deterministic in the seed.
    """
    if n < 2:
        raise ValueError("ribbon length must be at least 2")
    if tiles < 1:
        raise ValueError("tile count must be positive")
    rng = random.Random(seed)
    occupied: set[Cell] = set()
    for _ in range(tiles):
        for _attempt in range(10000):
            if occupied:
                frontier = sorted(
                    {
                        nb
                        for x, y in occupied
                        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))
                        if nb not in occupied
                    }
                )
                x, y = rng.choice(frontier)
            else:
                x, y = 0, 0
            ribbon = [(x, y)]
            for _step in range(n - 1):
                if rng.random() < 0.5:
                    x += 1
                else:
                    y += 1
                ribbon.append((x, y))
            if occupied.isdisjoint(ribbon):
                occupied.update(ribbon)
                break
        else:
            raise RuntimeError("failed to place a disjoint ribbon")  # pragma: no cover
    return Region.from_cells(occupied)
