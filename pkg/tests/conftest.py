"""Shared test corpus: rectangles, strips, Aztec diamonds, seeded random regions."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import NamedTuple

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ribbonlab import Region, gen_aztec, gen_random_tileable, gen_rectangle


class CorpusEntry(NamedTuple):
    id: str
    region: Region
    n: int


def build_corpus() -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []
    # rectangles up to area 24, paired with every n in {2,3,4} dividing the area
    for h in range(1, 5):
        for w in range(h, 25):
            if w * h > 24:
                break
            for n in (2, 3, 4):
                if (w * h) % n == 0:
                    entries.append(CorpusEntry(f"rect{w}x{h}-n{n}", gen_rectangle(w, h), n))
    # strips: height exactly n
    for n in (2, 3, 4):
        for w in range(1, 24 // n + 1):
            entries.append(CorpusEntry(f"strip{w}x{n}-n{n}", gen_rectangle(w, n), n))
    # Aztec diamonds, dominoes only
    for k in (1, 2, 3):
        entries.append(CorpusEntry(f"aztec{k}-n2", gen_aztec(k), 2))
    # seeded random regions, tileable by construction
    for n in (2, 3, 4):
        for seed in range(1, 41):
            tiles = 2 + seed % (24 // n - 1)
            entries.append(
                CorpusEntry(f"rand-n{n}-t{tiles}-s{seed}", gen_random_tileable(n, tiles, seed), n)
            )
    return entries


@pytest.fixture(scope="session")
def corpus() -> list[CorpusEntry]:
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus) -> list[CorpusEntry]:
    """Entries small enough for exhaustive enumeration round trips."""
    return [e for e in corpus if e.region.area <= 20]
