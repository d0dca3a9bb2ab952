"""Exact enumeration and counting of ribbon tilings via root choices.

Both engines walk level boundaries bottom-up. At each boundary the run
decomposition either kills the branch (a form-a run), passes tiles through
(form b), or offers the upper cells of each form-c run as root candidates;
choosing one root per form-c run determines the next frontier. The streaming
DFS enumerates choices outright; the DP merges frontiers that share an age
vector and adds their counts.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .region import Cell, Region, level_profile
from .runs import FrontierState, Run, RunDecomposition, RunForm, decompose_runs
from .tiling import RootSet, Tiling, compute_tau, decode_roots

DEFAULT_MEMO_CAP = 1_000_000
MEMO_CAP_ENV = "RIBBONLAB_MEMO_CAP"


class MemoCapacityError(RuntimeError):
    """The DP frontier table outgrew its cap; no count was produced."""


@dataclass(frozen=True)
class CountResult:
    """Exact tiling count plus search-effort metrics.

    `nodes_explored` counts visited search states (DFS/oracle) or expanded
    frontier states (DP); `peak_states` is the largest per-level frontier
    table the DP held, 0 for the other engines.
    """

    count: int
    nodes_explored: int
    peak_states: int = 0


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError("ribbon length must be at least 2")


def _resolve_cap(memo_cap: int | None) -> int:
    if memo_cap is not None:
        return memo_cap
    env = os.environ.get(MEMO_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{MEMO_CAP_ENV} must be an integer, got {env!r}") from exc
    return DEFAULT_MEMO_CAP


def initial_state(region: Region) -> FrontierState:
    """Frontier at boundary 1: every level-0 cell is forcibly a root (age 0)."""
    return FrontierState(1, tuple((c, 0) for c in region.level_cells(0)))


def advance_frontier(
    region: Region,
    n: int,
    state: FrontierState,
    decomp: RunDecomposition,
    choice: Sequence[Cell],
) -> FrontierState:
    """Apply one root choice per form-c run and return the next frontier.

    Within each run the lower-level whites are matched, left to right, with
    the non-root upper cells; matched cells age by one and chosen roots start
    at age 0. `choice` lists one cell per form-c run, in run order.
    """
    ages = dict(state.ages)
    new_ages: dict[Cell, int] = {}
    picks = iter(choice)
    for run in decomp.runs:
        if run.form is RunForm.A:
            raise ValueError("cannot advance across a form-a run")
        if run.form is RunForm.C:
            root = next(picks)
            if root not in run.a_set:
                raise ValueError(f"{root} is not a root candidate of its run")
            new_ages[root] = 0
            targets = [c for c in run.a_set if c != root]
        else:
            targets = list(run.a_set)
        lowers = [c for c in run.cells if c not in run.a_set]
        for low, up in zip(lowers, targets, strict=True):
            new_ages[up] = ages[low] + 1
    return FrontierState(state.level + 1, tuple(sorted(new_ages.items())))


def _expand(
    region: Region, n: int, state: FrontierState
) -> Iterator[tuple[tuple[Cell, ...], FrontierState]]:
    """Yield (chosen roots, next frontier) for every admissible choice, in
    left-to-right lexicographic order; yields nothing on a dead boundary."""
    decomp = decompose_runs(region, state, n)
    c_runs: list[Run] = []
    for run in decomp.runs:
        if run.form is RunForm.A:
            return
        if run.form is RunForm.C:
            c_runs.append(run)
    for choice in product(*(run.a_set for run in c_runs)):
        yield choice, advance_frontier(region, n, state, decomp, choice)


def _complete(state: FrontierState, n: int) -> bool:
    return all(a == n - 1 for _, a in state.ages)


def enumerate_tilings(region: Region, n: int) -> Iterator[Tiling]:
    """Yield every n-ribbon tiling exactly once, ordered by root sequence.

    The stream is lexicographic in the (level, x)-sorted root cells; each leaf
    is materialized by decoding the accumulated root set.
    """
    _check_n(n)
    if region.area % n:
        return
    roots = list(region.level_cells(0))
    yield from _walk(region, n, initial_state(region), roots)


def _walk(region: Region, n: int, state: FrontierState, roots: list[Cell]) -> Iterator[Tiling]:
    if state.level > region.max_level:
        if _complete(state, n):
            yield decode_roots(RootSet(region, n, frozenset(roots)))
        return
    base = len(roots)
    for choice, nxt in _expand(region, n, state):
        roots.extend(choice)
        yield from _walk(region, n, nxt, roots)
        del roots[base:]


def count_dfs(region: Region, n: int, threads: int = 1) -> CountResult:
    """Count tilings by depth-first search over root choices.

    With threads > 1 the choices at the first boundary are farmed out to a
    thread pool; subcounts are exact integers, so the result is identical to
    the sequential run.
    """
    _check_n(n)
    if region.area % n:
        return CountResult(0, 0, 0)
    state0 = initial_state(region)
    if threads <= 1 or state0.level > region.max_level:
        counter = [0]
        return CountResult(_count_from(region, n, state0, counter), counter[0], 0)
    branches = [nxt for _, nxt in _expand(region, n, state0)]
    counters = [[0] for _ in branches]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_count_from, region, n, s, c) for s, c in zip(branches, counters)
        ]
        total = sum(f.result() for f in futures)
    return CountResult(total, 1 + sum(c[0] for c in counters), 0)


def _count_from(region: Region, n: int, state: FrontierState, counter: list[int]) -> int:
    counter[0] += 1
    if state.level > region.max_level:
        return 1 if _complete(state, n) else 0
    return sum(_count_from(region, n, nxt, counter) for _, nxt in _expand(region, n, state))


def count_frontier_dp(region: Region, n: int, memo_cap: int | None = None) -> CountResult:
    """Count tilings by dynamic programming over (level, age vector).

    Frontiers reached by different root choices but carrying the same age
    vector are merged with their counts added; the table size per level is
    capped (RIBBONLAB_MEMO_CAP or `memo_cap`) and overflowing it raises
    MemoCapacityError rather than ever returning a wrong count.
    """
    _check_n(n)
    cap = _resolve_cap(memo_cap)
    if region.area % n:
        return CountResult(0, 0, 0)
    top = region.max_level
    layer: dict[tuple[int, ...], int] = {initial_state(region).age_vector(): 1}
    peak = len(layer)
    expanded = 0
    for l in range(1, top + 1):
        below = region.level_cells(l - 1)
        nxt: dict[tuple[int, ...], int] = {}
        for vec, ways in layer.items():
            expanded += 1
            state = FrontierState(l, tuple(zip(below, vec)))
            for _, child in _expand(region, n, state):
                key = child.age_vector()
                nxt[key] = nxt.get(key, 0) + ways
                if len(nxt) > cap:
                    raise MemoCapacityError(
                        f"frontier table exceeded {cap} states at level {l}"
                    )
        layer = nxt
        peak = max(peak, len(layer))
        if not layer:
            return CountResult(0, expanded, peak)
    count = sum(ways for vec, ways in layer.items() if all(a == n - 1 for a in vec))
    return CountResult(count, expanded, peak)


def is_tileable(region: Region, n: int) -> bool:
    """Cheap necessary checks first, then DFS with exit on the first tiling."""
    _check_n(n)
    if region.area % n:
        return False
    if compute_tau(level_profile(region), n) is None:
        return False
    return _first(region, n, initial_state(region))


def _first(region: Region, n: int, state: FrontierState) -> bool:
    if state.level > region.max_level:
        return _complete(state, n)
    return any(_first(region, n, nxt) for _, nxt in _expand(region, n, state))
