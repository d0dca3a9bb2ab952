"""Level-boundary machinery: frontier ages, black-white coloring, runs.

At the boundary below level l, color the cells of levels l-1 and l together
with their boundary squares: boundary squares and cells whose tile has just
reached full length are black, everything else is white. The whites fall into
maximal blocks of consecutive positions in the left-of order ("runs"); a run's
form decides how root cells at level l may be placed in it:

  form a (one extra lower cell)  - no tiling can extend through it;
  form b (balanced)              - tiles pass straight through, no roots;
  form c (one extra upper cell)  - exactly one root, chosen among its
                                   upper-level cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .region import Cell, Region, boundary_squares, level, order_key


class RunForm(str, Enum):
    A = "a"
    B = "b"
    C = "c"


@dataclass(frozen=True)
class FrontierState:
    """Ages of the tiles covering the cells one level below a boundary.

    `ages` pairs every region cell of level `level - 1` with the number of
    levels its covering tile has advanced so far (0 for a cell that is itself
    a root, n-1 for a tile ending there), in increasing x order. The age
    vector is the minimal statistic the boundary machinery needs, which makes
    it the memo key for counting.
    """

    level: int
    ages: tuple[tuple[Cell, int], ...]

    @classmethod
    def from_ages(cls, boundary_level: int, ages: Mapping[Cell, int]) -> "FrontierState":
        return cls(boundary_level, tuple(sorted(ages.items())))

    def age_vector(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.ages)

    def age_map(self) -> dict[Cell, int]:
        return dict(self.ages)


@dataclass(frozen=True)
class Run:
    """A maximal block of whites at consecutive left-of positions.

    `cells` alternate between the two boundary levels; `a_set` holds the
    upper-level cells, the root candidates when the form is c.
    """

    cells: tuple[Cell, ...]
    d: int
    form: RunForm
    a_set: tuple[Cell, ...]


@dataclass(frozen=True)
class RunDecomposition:
    level: int
    whites: frozenset[Cell]
    blacks: frozenset[Cell]
    runs: tuple[Run, ...]


def end_squares(state: FrontierState, n: int) -> frozenset[Cell]:
    """Cells below the boundary whose covering tile has reached full length."""
    return frozenset(c for c, a in state.ages if a == n - 1)


def classify_run(cells: Sequence[Cell], boundary_level: int) -> Run:
    """Build a Run from candidate cells, checking they really form one.

    The cells must sit at consecutive keys of the left-of order on levels
    {boundary_level - 1, boundary_level}; consecutive keys alternate levels,
    so alternation needs no separate check.
    """
    if not cells:
        raise ValueError("a run must contain at least one cell")
    keys = [order_key(c, boundary_level - 1) for c in cells]
    for prev, cur in zip(keys, keys[1:]):
        if cur != prev + 1:
            raise ValueError("run cells are not consecutive in the left-of order")
    upper = tuple(c for c in cells if level(c) == boundary_level)
    d = 2 * len(upper) - len(cells)
    form = {-1: RunForm.A, 0: RunForm.B, 1: RunForm.C}[d]
    return Run(tuple(cells), d, form, upper)


def decompose_runs(region: Region, state: FrontierState, n: int) -> RunDecomposition:
    """Color the boundary band of `state` and split the whites into runs.

    Whites are the not-yet-finished lower-level cells plus all upper-level
    cells; blacks are finished tiles' end cells and the boundary squares of
    both levels. Positions that are neither (outside the region and not
    adjacent to it) separate runs exactly like blacks do.
    """
    l = state.level
    ended = end_squares(state, n)
    whites = (frozenset(c for c, _ in state.ages) - ended) | frozenset(region.level_cells(l))
    blacks = ended | boundary_squares(region, l - 1) | boundary_squares(region, l)
    by_key = {order_key(c, l - 1): c for c in whites}
    runs: list[Run] = []
    block: list[Cell] = []
    prev_key: int | None = None
    for k in sorted(by_key):
        if prev_key is not None and k != prev_key + 1:
            runs.append(classify_run(block, l))
            block = []
        block.append(by_key[k])
        prev_key = k
    if block:
        runs.append(classify_run(block, l))
    return RunDecomposition(l, whites, blacks, tuple(runs))
