"""Brute-force ribbon placement used as ground truth.

Deliberately shares nothing with the run/frontier machinery beyond the Region
and Ribbon types: it repeatedly takes the uncovered cell that is minimal in
(level, x) order - necessarily the root of whatever tile covers it, since all
lower cells are already covered - and tries every step word that stays inside
the uncovered part of the region.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .counting import CountResult
from .region import Cell, Region
from .tiling import Ribbon, Tiling


def oracle_enumerate(region: Region, n: int, _stats: list[int] | None = None) -> Iterator[Tiling]:
    """Yield every n-ribbon tiling once, branching over words in lexicographic
    order ('R' < 'U'); roots appear in increasing (level, x) order, so the
    emitted ribbon tuples are already canonically sorted."""
    if n < 2:
        raise ValueError("ribbon length must be at least 2")
    if region.area % n:
        return
    order = sorted(region.cells, key=lambda c: (c[0] + c[1], c[0]))
    words = ["".join(w) for w in product("RU", repeat=n - 1)]
    cells = region.cells
    covered: set[Cell] = set()
    placed: list[Ribbon] = []

    def walk() -> Iterator[Tiling]:
        if _stats is not None:
            _stats[0] += 1
        root = next((c for c in order if c not in covered), None)
        if root is None:
            yield Tiling(region, tuple(placed))
            return
        for word in words:
            x, y = root
            ribbon_cells = [root]
            for step in word:
                if step == "U":
                    y += 1
                else:
                    x += 1
                ribbon_cells.append((x, y))
            if all(c in cells and c not in covered for c in ribbon_cells):
                covered.update(ribbon_cells)
                placed.append(Ribbon(root, word))
                yield from walk()
                placed.pop()
                covered.difference_update(ribbon_cells)

    yield from walk()


def oracle_count(region: Region, n: int) -> CountResult:
    stats = [0]
    count = sum(1 for _ in oracle_enumerate(region, n, _stats=stats))
    return CountResult(count, stats[0], 0)
