"""Geometry export: Wavefront OBJ for box families, SVG for 2-D cliques and profiles."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import Box, Combination

# ---------------------------------------------------------------------------
# OBJ

_FACES = ((1, 2, 4, 3), (5, 7, 8, 6), (1, 5, 6, 2), (3, 4, 8, 7), (1, 3, 7, 5), (2, 6, 8, 4))


def centre(boxes: Sequence[Box]) -> tuple[Fraction, ...]:
    """Centre of the circumscribed box."""
    n = len(boxes[0])
    return tuple(Fraction(min(b[k].lo for b in boxes) + max(b[k].hi for b in boxes), 4) for k in range(n))


def centred_corners(boxes: Sequence[Box]) -> list[list[tuple[Fraction, ...]]]:
    """The eight corners of every 3-box after centring, in binary corner order."""
    c = centre(boxes)
    out = []
    for b in boxes:
        if len(b) != 3:
            raise ValueError("OBJ export needs 3-boxes")
        lo = [Fraction(b[k].lo, 2) - c[k] for k in range(3)]
        hi = [Fraction(b[k].hi, 2) - c[k] for k in range(3)]
        out.append([(x, y, z) for x in (lo[0], hi[0]) for y in (lo[1], hi[1]) for z in (lo[2], hi[2])])
    return out


def to_obj(boxes: Sequence[Box], name: str = "family") -> str:
    """One cuboid object per box, translated so the circumscribed box is centred at the origin."""
    lines = [f"# {name}: {len(boxes)} boxes", f"g {name}"]
    for k, corners in enumerate(centred_corners(boxes)):
        lines.append(f"o box{k + 1}")
        for v in corners:
            lines.append("v " + " ".join(f"{float(t):g}" for t in v))
        base = 8 * k
        for f in _FACES:
            lines.append("f " + " ".join(str(base + i) for i in f))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# SVG

_PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999")


def _svg(width: float, height: float, body: list[str]) -> str:
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
            f'viewBox="0 0 {width:g} {height:g}">\n' + "\n".join(body) + "\n</svg>\n")


def clique_panel(boxes: Sequence[Box], x0: float, y0: float, unit: float, extent: int) -> list[str]:
    """Rectangles of a 2-D family drawn in a square of side ``extent`` units; y grows upwards."""
    body = [f'<rect x="{x0:g}" y="{y0:g}" width="{extent * unit:g}" height="{extent * unit:g}" '
            f'fill="none" stroke="#cccccc"/>']
    for k, b in enumerate(boxes):
        if len(b) != 2:
            raise ValueError("SVG panels need 2-boxes")
        x, w = b[0].lo / 2 * unit, (b[0].hi - b[0].lo) / 2 * unit
        h = (b[1].hi - b[1].lo) / 2 * unit
        y = y0 + extent * unit - b[1].hi / 2 * unit
        body.append(f'<rect x="{x0 + x:g}" y="{y:g}" width="{w:g}" height="{h:g}" '
                    f'fill="{_PALETTE[k % len(_PALETTE)]}" fill-opacity="0.35" stroke="black"/>')
    return body


def cliques_svg(cliques: Sequence[Sequence[Box]], extent: int, cols: int = 5, unit: float = 30,
                titles: Sequence[str] | None = None) -> str:
    """A grid of 2-D clique panels."""
    pad = unit
    cell = extent * unit + 2 * pad
    rows = -(-len(cliques) // cols)
    body = []
    for n, cl in enumerate(cliques):
        x0 = (n % cols) * cell + pad
        y0 = (n // cols) * cell + pad
        body += clique_panel(cl, x0, y0, unit, extent)
        if titles:
            body.append(f'<text x="{x0:g}" y="{y0 - 6:g}" font-size="12">{titles[n]}</text>')
    return _svg(cols * cell, rows * cell, body)


def profile_svg(gamma: Combination, unit: float = 40, row: float = 14) -> str:
    """Intervals of a combination as stacked segments, one line per copy."""
    items = gamma.items()
    right = max(x.hi for x, _ in items) / 2
    body = []
    y = row
    for x, k in items:
        for _ in range(k):
            x1, x2 = unit * (x.lo / 2 + 0.5), unit * (x.hi / 2 + 0.5)
            body.append(f'<line x1="{x1:g}" y1="{y:g}" x2="{x2:g}" y2="{y:g}" stroke="black" stroke-width="3"/>')
            body.append(f'<text x="{x2 + 4:g}" y="{y + 4:g}" font-size="10">{x!r}</text>')
            y += row
    for t in range(int(right) + 1):
        px = unit * (t + 0.5)
        body.append(f'<line x1="{px:g}" y1="0" x2="{px:g}" y2="{y:g}" stroke="#dddddd"/>')
    return _svg(unit * (right + 2), y + row, body)
