"""Ribbons, tilings, per-level tile counts, and the root-set codec.

A tiling is fully determined by the set of root cells of its ribbons: walking
levels bottom-up, the tiles still in progress (ordered left to right) must
cover the non-root cells of the next level in the same left-to-right order.
`decode_roots` replays that matching and rejects candidate sets for which it
breaks down.
"""

from __future__ import annotations

from dataclasses import dataclass

from .region import Cell, LevelProfile, Region, level

UP = "U"
RIGHT = "R"


class TilingFormatError(ValueError):
    """Raised when tiling/root-set text does not follow the line format."""


class RootDecodeError(Exception):
    """A candidate root set admits no tiling; carries the failing level."""

    def __init__(self, level: int, reason: str):
        super().__init__(f"level {level}: {reason}")
        self.level = level
        self.reason = reason


@dataclass(frozen=True)
class Ribbon:
    """One n-ribbon: a root cell plus a word of n-1 'U'/'R' steps.

    Each step raises the level by one, so the shape constraint (one cell per
    level, each cell above or right of its predecessor) holds by construction.
    """

    root: Cell
    word: str

    def __post_init__(self) -> None:
        if not self.word:
            raise ValueError("ribbon length must be at least 2")
        bad = set(self.word) - {UP, RIGHT}
        if bad:
            raise ValueError(f"illegal ribbon steps: {sorted(bad)}")

    @property
    def n(self) -> int:
        return len(self.word) + 1

    @property
    def level(self) -> int:
        return self.root[0] + self.root[1]

    def cells(self) -> tuple[Cell, ...]:
        x, y = self.root
        out = [(x, y)]
        for step in self.word:
            if step == UP:
                y += 1
            else:
                x += 1
            out.append((x, y))
        return tuple(out)

    @property
    def end(self) -> Cell:
        return self.cells()[-1]


@dataclass(frozen=True)
class Tiling:
    """A region together with ribbons that are meant to cover it exactly."""

    region: Region
    ribbons: tuple[Ribbon, ...]


@dataclass(frozen=True)
class TauProfile:
    """Per-level tile counts tau_0..tau_L, identical for every tiling of a region."""

    tau: tuple[int, ...]


def validate_tiling(t: Tiling, n: int) -> bool:
    """True iff every ribbon has length n and they cover the region exactly once."""
    seen: set[Cell] = set()
    for r in t.ribbons:
        if r.n != n:
            return False
        for c in r.cells():
            if c in seen:
                return False
            seen.add(c)
    return seen == set(t.region.cells)


def compute_tau(profile: LevelProfile, n: int) -> TauProfile | None:
    """Tile counts forced by the level profile, or None when none exist.

    tau_l = sigma_l - sum(tau_{l-n+1} .. tau_{l-1}); the recurrence is extended
    n-1 levels past the top with sigma = 0, so tiles that would overhang the
    region show up as a negative value and make the profile infeasible.
    """
    if n < 2:
        raise ValueError("ribbon length must be at least 2")
    sigma = profile.sigma
    top = len(sigma) - 1
    tau: list[int] = []
    for l in range(top + n):
        s = sigma[l] if l <= top else 0
        t = s - sum(tau[max(0, l - n + 1): l])
        if t < 0:
            return None
        tau.append(t)
    return TauProfile(tuple(tau[: top + 1]))


@dataclass(frozen=True)
class RootSet:
    """Candidate root cells for an n-ribbon tiling of a region.

    Encodings of valid tilings additionally contain every level-0 cell and
    carry the forced number of roots per level; `decode_roots` rejects
    candidates violating those conditions rather than this constructor.
    """

    region: Region
    n: int
    roots: frozenset[Cell]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("ribbon length must be at least 2")
        if self.region.area % self.n:
            raise ValueError("region area is not divisible by the ribbon length")
        if not self.roots <= self.region.cells:
            raise ValueError("roots must lie inside the region")
        if len(self.roots) != self.region.area // self.n:
            raise ValueError(
                f"expected {self.region.area // self.n} roots, got {len(self.roots)}"
            )


def encode_roots(t: Tiling) -> RootSet:
    """Project a valid tiling onto the set of its ribbons' root cells."""
    if not t.ribbons:
        raise ValueError("tiling has no ribbons")
    n = t.ribbons[0].n
    if not validate_tiling(t, n):
        raise ValueError("not a valid tiling of its region")
    return RootSet(t.region, n, frozenset(r.root for r in t.ribbons))


def decode_roots(rs: RootSet) -> Tiling:
    """Reconstruct the unique tiling with the given roots, or raise RootDecodeError.

    Level by level, the in-progress ribbons (left to right) are matched to the
    non-root cells of the level (left to right); the match must step up or
    right, every level-0 cell must be a root, and every ribbon must reach its
    full length by the top of the region.
    """
    region, n, roots = rs.region, rs.n, rs.roots
    active: list[tuple[Cell, list[str], Cell]] = []  # (root, word so far, top cell)
    done: list[Ribbon] = []
    for l in range(region.max_level + 1):
        row = region.level_cells(l)
        targets = [c for c in row if c not in roots]
        if len(active) != len(targets):
            raise RootDecodeError(l, "count-mismatch")
        extended: list[tuple[Cell, list[str], Cell]] = []
        for (root, word, (tx, ty)), cell in zip(active, targets):
            if cell == (tx, ty + 1):
                word.append(UP)
            elif cell == (tx + 1, ty):
                word.append(RIGHT)
            else:
                raise RootDecodeError(l, "non-adjacent")
            if len(word) + 1 == n:
                done.append(Ribbon(root, "".join(word)))
            else:
                extended.append((root, word, cell))
        for c in row:
            if c in roots:
                extended.append((c, [], c))
        extended.sort(key=lambda rec: rec[2][0])
        active = extended
    if active:
        raise RootDecodeError(region.max_level, "unfinished-ribbon")
    done.sort(key=lambda r: (r.level, r.root[0]))
    return Tiling(region, tuple(done))


def serialize_tiling(t: Tiling) -> str:
    """One 'x y WORD' line per ribbon, sorted by (root level, root x)."""
    ribbons = sorted(t.ribbons, key=lambda r: (r.level, r.root[0]))
    return "\n".join(f"{r.root[0]} {r.root[1]} {r.word}" for r in ribbons)


def parse_tiling(text: str) -> tuple[Ribbon, ...]:
    ribbons = []
    for i, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            raise TilingFormatError(f"line {i}: expected 'x y WORD'")
        try:
            ribbons.append(Ribbon((int(parts[0]), int(parts[1])), parts[2]))
        except ValueError as exc:
            raise TilingFormatError(f"line {i}: {exc}") from exc
    if not ribbons:
        raise TilingFormatError("no ribbons in tiling text")
    return tuple(ribbons)


def serialize_roots(rs: RootSet) -> str:
    """One 'x y' line per root, sorted by (level, x)."""
    roots = sorted(rs.roots, key=lambda c: (level(c), c[0]))
    return "\n".join(f"{x} {y}" for x, y in roots)
