"""Deterministic SVG rendering of regions and tilings.

Axis-aligned mode draws unit cells as squares; rotated mode draws them as
diamonds so that cells of one level line up on a horizontal row. Identical
inputs produce byte-identical output.
"""

from __future__ import annotations

from .region import Region
from .tiling import Tiling, validate_tiling

CELL = 20
MARGIN = 10
ROOT_RADIUS = 4
PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#9c755f",
)
EMPTY_FILL = "#d8d8d8"


def render_svg(region: Region, tiling: Tiling | None = None, rotated: bool = False) -> str:
    """Render the region (optionally with a tiling of it) as SVG 1.1 text."""
    color: dict[tuple[int, int], str] = {}
    roots: list[tuple[int, int]] = []
    if tiling is not None:
        if tiling.region != region:
            raise ValueError("tiling was built for a different region")
        if not tiling.ribbons or not validate_tiling(tiling, tiling.ribbons[0].n):
            raise ValueError("not a valid tiling of the region")
        ribbons = sorted(tiling.ribbons, key=lambda r: (r.level, r.root[0]))
        for i, ribbon in enumerate(ribbons):
            for c in ribbon.cells():
                color[c] = PALETTE[i % len(PALETTE)]
            roots.append(ribbon.root)
    if rotated:
        return _render_rotated(region, color, roots)
    return _render_axis(region, color, roots)


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"])


def _render_axis(region: Region, color: dict, roots: list) -> str:
    xs = [x for x, _ in region.cells]
    ys = [y for _, y in region.cells]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0 + 1) * CELL + 2 * MARGIN
    height = (y1 - min(ys) + 1) * CELL + 2 * MARGIN
    body = ['<g stroke="#333333" stroke-width="1">']
    for x, y in sorted(region.cells, key=lambda c: (-c[1], c[0])):
        px = MARGIN + (x - x0) * CELL
        py = MARGIN + (y1 - y) * CELL
        fill = color.get((x, y), EMPTY_FILL)
        body.append(f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{fill}"/>')
    body.append("</g>")
    for x, y in roots:
        cx = MARGIN + (x - x0) * CELL + CELL // 2
        cy = MARGIN + (y1 - y) * CELL + CELL // 2
        body.append(f'<circle cx="{cx}" cy="{cy}" r="{ROOT_RADIUS}" fill="#1a1a1a"/>')
    return _svg(width, height, body)


def _render_rotated(region: Region, color: dict, roots: list) -> str:
    # u = x - y spaces cells within a level, v = x + y is the level; one level
    # per horizontal line, higher levels higher up.
    us = [x - y for x, y in region.cells]
    u0, v1 = min(us), region.max_level
    width = (max(us) - u0 + 2) * CELL + 2 * MARGIN
    height = (v1 + 2) * CELL + 2 * MARGIN

    def center(x: int, y: int) -> tuple[int, int]:
        cx = MARGIN + CELL + (x - y - u0) * CELL
        cy = MARGIN + CELL + (v1 - x - y) * CELL
        return cx, cy

    body = ['<g stroke="#333333" stroke-width="1">']
    for x, y in sorted(region.cells, key=lambda c: (-(c[0] + c[1]), c[0])):
        cx, cy = center(x, y)
        pts = f"{cx},{cy - CELL} {cx + CELL},{cy} {cx},{cy + CELL} {cx - CELL},{cy}"
        fill = color.get((x, y), EMPTY_FILL)
        body.append(f'<polygon points="{pts}" fill="{fill}"/>')
    body.append("</g>")
    for x, y in roots:
        cx, cy = center(x, y)
        body.append(f'<circle cx="{cx}" cy="{cy}" r="{ROOT_RADIUS}" fill="#1a1a1a"/>')
    return _svg(width, height, body)
