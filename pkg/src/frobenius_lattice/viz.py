"""SVG drawing of the coloured lattice strip for a coprime pair.

Markers carry ``class`` attributes (green, blue, red, highlight) so the
output can be checked by parsing rather than by pixels. Positive y points up.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Optional, Sequence

from .arith import CoprimePair
from .errors import DomainError, ResourceError
from .region import enumerate_region, linear_form

SVG_NS = "http://www.w3.org/2000/svg"
MAX_PRODUCT = 5000

FILL = {"green": "#2e9d3a", "blue": "#2a5cd6", "red": "#d43a2f"}


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 24.0
    show_values: bool = False
    highlight: Optional[Sequence] = None

    def __post_init__(self):
        if not self.scale > 0:
            raise DomainError(f"scale must be positive, got {self.scale}")


def _num(v: float) -> str:
    # fixed precision keeps output byte-stable across platforms
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_region_svg(pair: CoprimePair, opts: Optional[RenderOptions] = None) -> str:
    opts = opts or RenderOptions()
    a, b = pair.a, pair.b
    if a * b > MAX_PRODUCT:
        raise ResourceError(f"a*b = {a * b} exceeds the drawing cap {MAX_PRODUCT}")
    region = enumerate_region(pair)
    s = opts.scale
    margin = 2 * s

    def px(x):
        return margin + x * s

    def py(y):
        return margin + (a - y) * s

    width = 2 * margin + b * s
    height = 2 * margin + 2 * a * s
    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": _num(width),
            "height": _num(height),
            "viewBox": f"0 0 {_num(width)} {_num(height)}",
        },
    )
    ET.SubElement(root, "title").text = f"Lattice strip for a={a}, b={b}"

    axes = ET.SubElement(root, "g", {"class": "axes", "stroke": "#888888", "stroke-width": "1"})
    ET.SubElement(axes, "line", {"x1": _num(px(0)), "y1": _num(py(0)), "x2": _num(px(b)), "y2": _num(py(0))})
    ET.SubElement(axes, "line", {"x1": _num(px(0)), "y1": _num(py(a)), "x2": _num(px(0)), "y2": _num(py(-a))})

    guides = ET.SubElement(root, "g", {"class": "guides", "fill": "none", "stroke-width": "1.5"})
    # a*x + b*y = a*b, a*x + b*y = 0, and the dashed cutoff a*x + b*y = b
    for cls, (x1, y1, x2, y2), extra in (
        ("line-ab", (0, a, b, 0), {"stroke": "#444444"}),
        ("line-zero", (0, 0, b, -a), {"stroke": "#444444"}),
        ("line-cutoff", (0, 1, b, 1 - a), {"stroke": "#e08a1e", "stroke-dasharray": "6,4"}),
    ):
        attrs = {"class": cls, "x1": _num(px(x1)), "y1": _num(py(y1)), "x2": _num(px(x2)), "y2": _num(py(y2))}
        attrs.update(extra)
        ET.SubElement(guides, "line", attrs)

    radius = _num(max(s * 0.18, 1.0))
    markers = ET.SubElement(root, "g", {"class": "markers"})
    labels = ET.SubElement(root, "g", {"class": "values", "font-family": "sans-serif",
                                       "font-size": _num(max(s * 0.35, 6.0))})
    for colour, points in (("green", region.green), ("blue", region.blue), ("red", region.red)):
        for p in points:
            ET.SubElement(
                markers,
                "circle",
                {"class": colour, "cx": _num(px(p.x)), "cy": _num(py(p.y)), "r": radius, "fill": FILL[colour]},
            )
            if opts.show_values:
                text = ET.SubElement(labels, "text", {"x": _num(px(p.x) + s * 0.2), "y": _num(py(p.y) - s * 0.2)})
                text.text = str(linear_form(pair, p))

    if opts.highlight:
        rings = ET.SubElement(root, "g", {"class": "highlights", "fill": "none", "stroke": "#000000"})
        for x, y in opts.highlight:
            ET.SubElement(
                rings,
                "circle",
                {"class": "highlight", "cx": _num(px(x)), "cy": _num(py(y)),
                 "r": _num(max(s * 0.36, 2.0)), "stroke-width": "2"},
            )

    ET.indent(root)
    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"
