"""SVG pictures of modular colourings of the plane lattice."""
from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .colouring import ColourLattice, colour_of

DEFAULT_PALETTE = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#999999", "#17becf", "#bcbd22",
)
SVG_NS = "http://www.w3.org/2000/svg"
LAT_NS = "urn:chroma:lattice"


@dataclass(frozen=True)
class RenderSpec:
    k: int
    n: int
    extent: int = 4
    basis: str = "auto"
    palette: Tuple[str, ...] = DEFAULT_PALETTE
    radius: float = 6.0
    size: int = 480

    def __post_init__(self):
        if self.k not in (2, 3, 4, 6):
            raise ValueError(f"k must be one of 2, 3, 4, 6, got {self.k}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.extent < 1:
            raise ValueError("extent must be >= 1")
        if len(self.palette) < self.n:
            raise ValueError(f"palette has {len(self.palette)} colours, need {self.n}")
        if self.basis not in ("auto", "cartesian", "oblique"):
            raise ValueError(f"unknown basis {self.basis!r}")

    def basis_vectors(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        kind = self.basis
        if kind == "auto":
            kind = "oblique" if self.k in (3, 6) else "cartesian"
        if kind == "cartesian":
            return (1.0, 0.0), (0.0, 1.0)
        # second basis vector at angle 2*pi/k; C2 holds in any basis, so draw it hexagonal
        psi = 2 * math.pi / (3 if self.k == 2 else self.k)
        return (1.0, 0.0), (math.cos(psi), math.sin(psi))


def lattice_points(extent: int) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(-extent, extent + 1) for b in range(-extent, extent + 1)]


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(spec: RenderSpec) -> str:
    e1, e2 = spec.basis_vectors()
    pts = lattice_points(spec.extent)
    xy = [(a * e1[0] + b * e2[0], a * e1[1] + b * e2[1]) for a, b in pts]
    reach = max(max(abs(x), abs(y)) for x, y in xy)
    margin = spec.radius * 2
    scale = (spec.size / 2 - margin) / reach
    c = spec.size / 2
    lat = ColourLattice(2, spec.n)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="{SVG_NS}" xmlns:lat="{LAT_NS}" version="1.1" width="{spec.size}" height="{spec.size}" '
        f'viewBox="0 0 {spec.size} {spec.size}">',
        f'  <title>C{spec.k}, {spec.n}-colour modular lattice, |m_i| &lt;= {spec.extent}</title>',
        f'  <rect width="{spec.size}" height="{spec.size}" fill="#ffffff"/>',
    ]
    for (a, b), (x, y) in zip(pts, xy):
        q = colour_of(lat, (a, b))
        lines.append(
            f'  <circle cx="{_fmt(c + scale * x)}" cy="{_fmt(c - scale * y)}" '
            f'r="{_fmt(spec.radius)}" fill="{spec.palette[q]}" lat:m="{a},{b}" lat:colour="{q}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def parse_svg_points(text: str) -> Dict[Tuple[int, int], str]:
    """Read back lattice point -> fill from an SVG written by render_svg."""
    root = ET.fromstring(text)
    out = {}
    for el in root.iter(f"{{{SVG_NS}}}circle"):
        a, b = (int(v) for v in el.attrib[f"{{{LAT_NS}}}m"].split(","))
        out[(a, b)] = el.attrib["fill"]
    return out


def fill_counts(points: Dict[Tuple[int, int], str]) -> Dict[str, int]:
    counts: Dict[str, int] = {}
    for f in points.values():
        counts[f] = counts.get(f, 0) + 1
    return counts


def parse_palette(arg: Optional[str]) -> Sequence[str]:
    if not arg:
        return DEFAULT_PALETTE
    return tuple(s.strip() for s in arg.split(",") if s.strip())
