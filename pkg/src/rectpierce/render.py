"""SVG figures for instances, piercing results, and colorings.

The one place exact rationals are converted to floats. Conversion happens
at emission with fixed three-decimal formatting, so output bytes are a
deterministic function of the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .coloring import Coloring
from .errors import SchemaError
from .instance import Instance
from .pierce import PiercingResult
from .scalar import scalar_to_float

_PALETTE = (
    "#4c78a8",
    "#f58518",
    "#54a24b",
    "#e45756",
    "#72b7b2",
    "#eeca3b",
    "#b279a2",
    "#9d755d",
    "#bab0ac",
    "#d67195",
)


@dataclass(frozen=True)
class RenderStyle:
    """Canvas size in pixels, fill palette (cycled), and dot radius."""

    canvas: int = 800
    palette: Tuple[str, ...] = _PALETTE
    point_radius: float = 4.0

    def __post_init__(self) -> None:
        if self.canvas < 16:
            raise SchemaError("canvas too small")
        if not self.palette:
            raise SchemaError("palette must be nonempty")
        if self.point_radius <= 0:
            raise SchemaError("point radius must be positive")


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def render_svg(
    instance: Instance,
    overlay: Union[PiercingResult, Coloring, None] = None,
    style: RenderStyle = RenderStyle(),
) -> str:
    """Render rectangles as outlines, plus transversal dots or color fills.

    With a PiercingResult overlay, the certificate rectangles get a dashed
    outline and each transversal point a filled dot. With a Coloring
    overlay, rectangles are filled from the palette by color index.
    """
    colors: Optional[Coloring] = overlay if isinstance(overlay, Coloring) else None
    piercing: Optional[PiercingResult] = (
        overlay if isinstance(overlay, PiercingResult) else None
    )
    if colors is not None and len(colors.colors) != instance.n:
        raise SchemaError(
            f"coloring has {len(colors.colors)} entries for {instance.n} rects"
        )

    if instance.n:
        bx_lo = min(r.x_lo for r in instance.rects)
        bx_hi = max(r.x_hi for r in instance.rects)
        by_lo = min(r.y_lo for r in instance.rects)
        by_hi = max(r.y_hi for r in instance.rects)
    else:
        bx_lo, bx_hi, by_lo, by_hi = Fraction(0), Fraction(1), Fraction(0), Fraction(1)
    if piercing is not None:
        for p in piercing.transversal:
            bx_lo = min(bx_lo, p.x)
            bx_hi = max(bx_hi, p.x)
            by_lo = min(by_lo, p.y)
            by_hi = max(by_hi, p.y)

    size = float(style.canvas)
    margin = size * 0.05
    span = max(scalar_to_float(bx_hi - bx_lo), scalar_to_float(by_hi - by_lo), 1e-9)
    scale = (size - 2.0 * margin) / span

    def sx(v: Fraction) -> float:
        return margin + (scalar_to_float(v) - scalar_to_float(bx_lo)) * scale

    def sy(v: Fraction) -> float:
        return size - margin - (scalar_to_float(v) - scalar_to_float(by_lo)) * scale

    parts: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.canvas}" '
        f'height="{style.canvas}" viewBox="0 0 {style.canvas} {style.canvas}">',
        f'<rect x="0" y="0" width="{style.canvas}" height="{style.canvas}" fill="#ffffff"/>',
    ]
    dashed = set(piercing.certificate) if piercing is not None else set()
    for r in instance.rects:
        x = _fmt(sx(r.x_lo))
        y = _fmt(sy(r.y_hi))
        w = _fmt(scalar_to_float(r.width) * scale)
        h = _fmt(scalar_to_float(r.height) * scale)
        if colors is not None:
            fill = style.palette[colors.colors[r.id] % len(style.palette)]
            attrs = f'fill="{fill}" fill-opacity="0.55" stroke="#333333" stroke-width="1.5"'
        elif r.id in dashed:
            attrs = 'fill="none" stroke="#111111" stroke-width="2.5" stroke-dasharray="6,3"'
        else:
            attrs = 'fill="none" stroke="#333333" stroke-width="1.5"'
        parts.append(
            f'<rect x="{x}" y="{y}" width="{w}" height="{h}" {attrs}>'
            f"<title>rect {r.id}</title></rect>"
        )
    if piercing is not None:
        for p in piercing.transversal:
            parts.append(
                f'<circle cx="{_fmt(sx(p.x))}" cy="{_fmt(sy(p.y))}" '
                f'r="{_fmt(style.point_radius)}" fill="#d62728"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
