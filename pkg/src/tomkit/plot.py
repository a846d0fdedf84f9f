"""Static SVG rendering of mixed subdivisions of n * Delta_2 (d = 3 only).

Cells are filled polygons colored by their left degree vector (the LDV fixes
the shape of a cell); the unit simplex each cell contains is outlined at the
cell's right degree vector, which is its location.
"""

from __future__ import annotations

import colorsys
import itertools
import math

from .subdivision import CellCollection
from .types import TropicalType, left_degree_vector, mask_elements, right_degree_vector

_SQ3 = math.sqrt(3.0)


def _embed(p, scale: float, margin: float, n: int) -> tuple[float, float]:
    """Barycentric embedding of a point with x1 + x2 + x3 = n."""
    x1, x2, x3 = p
    px = x2 + 0.5 * x3
    py = (n - x3) * _SQ3 / 2  # apex (vertex 3) at the top
    return margin + scale * px, margin + scale * py


def _cell_vertices(cell: TropicalType) -> list[tuple[int, int, int]]:
    pts = set()
    for choice in itertools.product(*(mask_elements(m) for m in cell.masks)):
        v = [0, 0, 0]
        for j in choice:
            v[j - 1] += 1
        pts.add(tuple(v))
    return sorted(pts)


def _polygon_order(points_2d: list[tuple[float, float]]) -> list[tuple[float, float]]:
    cx = sum(p[0] for p in points_2d) / len(points_2d)
    cy = sum(p[1] for p in points_2d) / len(points_2d)
    return sorted(points_2d, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def _palette(count: int) -> list[str]:
    out = []
    for k in range(max(count, 1)):
        r, g, b = colorsys.hls_to_rgb((k * 0.61803) % 1.0, 0.72, 0.55)
        out.append(f"#{int(r*255):02x}{int(g*255):02x}{int(b*255):02x}")
    return out


def render_subdivision_svg(C: CellCollection, scale: float = 80.0) -> str:
    """SVG text for a subdivision of n * Delta_2."""
    if C.d != 3:
        raise ValueError("plotting is implemented for d = 3 only")
    n = C.n
    margin = 0.4 * scale
    width = scale * n + 2 * margin
    height = scale * n * _SQ3 / 2 + 2 * margin

    ldvs = sorted({left_degree_vector(c).entries for c in C.cells})
    colors = dict(zip(ldvs, _palette(len(ldvs))))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.1f} {height:.1f}">',
        f"<!-- mixed subdivision of {n}*Delta_2, {len(C.cells)} cells; "
        "cells colored by LDV, unit simplices outlined at RDV -->",
    ]
    for cell in C.cells:
        pts = [_embed(v, scale, margin, n) for v in _cell_vertices(cell)]
        ring = _polygon_order(pts)
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in ring)
        color = colors[left_degree_vector(cell).entries]
        parts.append(
            f'<polygon points="{coords}" fill="{color}" stroke="#333" stroke-width="1"/>'
        )
    for cell in C.cells:
        a = right_degree_vector(cell).entries
        corners = []
        for j in range(3):
            v = list(a)
            v[j] += 1
            corners.append(_embed(v, scale, margin, n))
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in _polygon_order(corners))
        parts.append(
            f'<polygon points="{coords}" fill="none" stroke="#111" '
            'stroke-width="1.5" stroke-dasharray="4 2"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
