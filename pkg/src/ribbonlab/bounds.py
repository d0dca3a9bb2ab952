"""Per-tile entropy and arbitrary-precision upper bounds on tiling counts.

Three bounds, loosest to tightest: the binomial bound C(A, A/n) (tilings pick
distinct root subsets), the power bound n^(A/n), and the per-region level
product bound, which maximizes the product of root-candidate set sizes level
by level subject to the per-level cell budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .counting import count_frontier_dp
from .region import Region, level_profile
from .tiling import LevelProfile, TauProfile, compute_tau


def per_tile_entropy(count: int, area: int, n: int) -> float:
    """Binary logarithm of the tiling count divided by the tile count."""
    if area % n:
        raise ValueError("area must be divisible by the ribbon length")
    if count < 1:
        raise ValueError("per-tile entropy is undefined for a count of 0")
    return math.log2(count) * n / area


def power_bound(area: int, n: int) -> int:
    """n^(A/n), the cap equivalent to per-tile entropy <= log2(n)."""
    if area % n:
        raise ValueError("area must be divisible by the ribbon length")
    return n ** (area // n)


def binomial_bound(area: int, n: int) -> int:
    """C(A, A/n): distinct tilings use distinct root subsets of that size."""
    if area % n:
        raise ValueError("area must be divisible by the ribbon length")
    return math.comb(area, area // n)


def balanced_split(total: int, parts: int) -> tuple[int, ...]:
    """The `parts` positive integers with sum <= total whose product is maximal.

    The optimum spends the whole budget as evenly as possible: with
    q, r = divmod(total, parts) it is r copies of q+1 and parts-r copies of q.
    """
    if parts < 0:
        raise ValueError("parts must be non-negative")
    if parts == 0:
        return ()
    if total < parts:
        raise ValueError("need at least one unit per part")
    q, r = divmod(total, parts)
    return (q + 1,) * r + (q,) * (parts - r)


def level_product_bound(profile: LevelProfile, tau: TauProfile) -> int:
    """Product over levels of the balanced-split maximum for (sigma_l, tau_l).

    Levels without tiles contribute an empty product of 1.
    """
    out = 1
    for s, t in zip(profile.sigma, tau.tau, strict=True):
        out *= math.prod(balanced_split(s, t))
    return out


@dataclass(frozen=True)
class BoundReport:
    region_id: str
    n: int
    area: int
    tiles: int
    count: int | None
    entropy: float | None
    level_product_bound: int
    power_bound: int
    binomial_bound: int
    level_factors: tuple[tuple[int, ...], ...]


def bound_report(
    region: Region, n: int, region_id: str = "region", include_count: bool = True
) -> BoundReport:
    """Assemble every bound for one region; the exact count is optional
    because it is the only expensive entry."""
    profile = level_profile(region)
    tau = compute_tau(profile, n)
    if tau is None:
        raise ValueError("level profile admits no per-level tile counts")
    factors = tuple(
        balanced_split(s, t) for s, t in zip(profile.sigma, tau.tau, strict=True)
    )
    count = entropy = None
    if include_count:
        count = count_frontier_dp(region, n).count
        entropy = per_tile_entropy(count, region.area, n) if count >= 1 else None
    return BoundReport(
        region_id=region_id,
        n=n,
        area=region.area,
        tiles=region.area // n,
        count=count,
        entropy=entropy,
        level_product_bound=level_product_bound(profile, tau),
        power_bound=power_bound(region.area, n),
        binomial_bound=binomial_bound(region.area, n),
        level_factors=factors,
    )


def corpus_entropy_report(
    regions: Iterable[Region], n: int, ids: Sequence[str] | None = None
) -> dict:
    """Exact per-tile entropies over a corpus, plus the maximum observed.

    Disjoint unions multiply counts, so the best per-tile entropy over regions
    of growing area can only go up: the reported maximum is a valid empirical
    lower bound on the best achievable value for this n. Every count is also
    checked against the integer power bound (never by float comparison).
    """
    entries = []
    best: float | None = None
    for i, region in enumerate(regions):
        rid = ids[i] if ids is not None else f"region-{i}"
        result = count_frontier_dp(region, n)
        if result.count == 0:
            raise ValueError(f"{rid}: region is not tileable by {n}-ribbons")
        if result.count > power_bound(region.area, n):  # pragma: no cover
            raise AssertionError(f"{rid}: count exceeds the power bound")
        entropy = per_tile_entropy(result.count, region.area, n)
        entries.append(
            {
                "region": rid,
                "area": region.area,
                "tiles": region.area // n,
                "count": result.count,
                "entropy": entropy,
            }
        )
        best = entropy if best is None else max(best, entropy)
    return {
        "n": n,
        "entropy_cap": math.log2(n),
        "regions": entries,
        "max_entropy": best,
        "max_entropy_is_lower_bound": best is not None,
    }
