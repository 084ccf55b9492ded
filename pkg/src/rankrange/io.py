"""JSON documents and SVG figures.

Documents
---------
* spectrum: ``[[re, im, mult], ...]`` (``mult`` optional) or
  ``{"spectrum": [...]}``
* polygon: ``{"vertices": [[re, im], ...]}`` or ``{"support": [[d, xi], ...]}``
* directions: ``[xi, ...]`` or ``{"angles": [...]}``, radians

Every number written by :func:`dumps` carries 12 significant digits.
"""

from __future__ import annotations

import json
import math
from typing import Any, Sequence

from .geometry import ConvexRegion, Kind
from .spectrum import NormalSpectrum
from .synthesis import PolygonSpec, SynthesisOutput, polygon_to_support

DIGITS = 12
SVG_SIZE = 600
SVG_PAD = 0.10
FILL_OPACITY = 0.3
MARKER_PX = 4


def rounded(x: float) -> float:
    return float(f"{x:.{DIGITS}g}")


def _pair(z: complex) -> list[float]:
    return [rounded(z.real), rounded(z.imag)]


def _number(x: Any) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ValueError(f"expected a number, got {x!r}")
    if not math.isfinite(x):
        raise ValueError("numbers must be finite")
    return float(x)


def parse_spectrum(doc: Any) -> NormalSpectrum:
    if isinstance(doc, dict):
        if "spectrum" not in doc:
            raise ValueError('spectrum document needs a "spectrum" list')
        doc = doc["spectrum"]
    if not isinstance(doc, list) or not doc:
        raise ValueError("spectrum must be a nonempty list of [re, im, mult] triples")
    pairs = []
    for row in doc:
        if not isinstance(row, list) or len(row) not in (2, 3):
            raise ValueError(f"bad spectrum entry {row!r}")
        mult = row[2] if len(row) == 3 else 1
        if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
            raise ValueError(f"multiplicity {mult!r} must be a positive integer")
        pairs.append((complex(_number(row[0]), _number(row[1])), mult))
    return NormalSpectrum.from_pairs(pairs)


def parse_polygon(doc: Any) -> PolygonSpec:
    if not isinstance(doc, dict) or not ({"vertices", "support"} & doc.keys()):
        raise ValueError('polygon document needs "vertices" or "support"')
    if "vertices" in doc:
        rows = doc["vertices"]
        if not isinstance(rows, list) or not all(isinstance(r, list) and len(r) == 2 for r in rows):
            raise ValueError("vertices must be a list of [re, im] pairs")
        return polygon_to_support([complex(_number(a), _number(b)) for a, b in rows])
    rows = doc["support"]
    if not isinstance(rows, list) or not all(isinstance(r, list) and len(r) == 2 for r in rows):
        raise ValueError("support must be a list of [d, xi] pairs")
    return PolygonSpec.from_support([(_number(d), _number(xi)) for d, xi in rows])


def parse_angles(doc: Any) -> list[float]:
    if isinstance(doc, dict):
        doc = doc.get("angles")
    if not isinstance(doc, list) or not doc:
        raise ValueError("angles must be a nonempty list of radians")
    return [_number(x) for x in doc]


def region_to_doc(region: ConvexRegion) -> dict:
    return {"kind": region.kind.value, "points": [_pair(z) for z in region.points]}


def region_from_doc(doc: dict) -> ConvexRegion:
    kind = Kind(doc["kind"])
    pts = tuple(complex(a, b) for a, b in doc["points"])
    return ConvexRegion(kind, pts)


def spectrum_to_doc(sp: NormalSpectrum) -> list[list[float]]:
    return [_pair(z) + [mult] for z, mult in sp.eigs]


def synthesis_to_doc(out: SynthesisOutput) -> dict:
    return {
        "n": out.n,
        "q": out.q,
        "spectrum": spectrum_to_doc(out.spectrum),
        "directions": [rounded(x) for x in out.directions],
        "offsets": [rounded(x) for x in out.offsets],
    }


def dumps(doc: Any, compact: bool = False) -> str:
    return json.dumps(doc, separators=(",", ":")) if compact else json.dumps(doc, indent=2)


def render_svg(
    region: ConvexRegion | None,
    eigenvalues: Sequence[complex],
    vertices: Sequence[complex] = (),
) -> str:
    """Plot of a region with eigenvalues as asterisks and polygon vertices as circles."""
    pts = list(eigenvalues) + list(vertices) + (list(region.points) if region is not None else [])
    if not pts:
        pts = [0j]
    xs = [z.real for z in pts]
    ys = [z.imag for z in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-12)
    cx, cy = (max(xs) + min(xs)) / 2, (max(ys) + min(ys)) / 2
    scale = SVG_SIZE / (span * (1 + 2 * SVG_PAD))

    def at(z: complex) -> tuple[float, float]:
        return (SVG_SIZE / 2 + (z.real - cx) * scale, SVG_SIZE / 2 - (z.imag - cy) * scale)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
    ]
    if region is not None and region.kind is Kind.POLYGON:
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(at, region.points))
        out.append(f'<polygon points="{coords}" fill="steelblue" fill-opacity="{FILL_OPACITY}" stroke="steelblue"/>')
    elif region is not None and region.kind is Kind.SEGMENT:
        (x1, y1), (x2, y2) = map(at, region.points)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="steelblue" stroke-width="3"/>')
    elif region is not None and region.kind is Kind.POINT:
        x, y = at(region.points[0])
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="steelblue"/>')
    for z in vertices:
        x, y = at(z)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{MARKER_PX}" fill="none" stroke="black"/>')
    for z in eigenvalues:
        x, y = at(z)
        r = MARKER_PX
        strokes = []
        for ang in (90, 30, 150):
            dx, dy = r * math.cos(math.radians(ang)), r * math.sin(math.radians(ang))
            strokes.append(f"M{x - dx:.2f},{y - dy:.2f}L{x + dx:.2f},{y + dy:.2f}")
        out.append(f'<path d="{"".join(strokes)}" stroke="crimson" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
