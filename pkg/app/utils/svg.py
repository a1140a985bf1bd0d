"""
SVG drawings of squared rectangles
"""

import logging
from pathlib import Path
from typing import Optional, Union

import svgwrite

from app.core.config import settings
from app.models.dissection import Dissection
from app.utils.file_utils import atomic_write_text

logger = logging.getLogger(__name__)


def _fmt(value: float) -> str:
    return f"{value:g}"


def render_svg(
    d: Dissection,
    scale: Optional[float] = None,
    stroke: Optional[float] = None,
    font_size: Optional[float] = None,
) -> str:
    """One outline plus one square per element, each labelled with its size at the centre.

    ``font_size`` of 0 scales every label with its square.
    """
    scale = settings.SVG_SCALE if scale is None else scale
    stroke = settings.SVG_STROKE if stroke is None else stroke
    font_size = settings.SVG_FONT_SIZE if font_size is None else font_size
    width, height = d.width * scale, d.height * scale

    dwg = svgwrite.Drawing(size=(_fmt(width), _fmt(height)), profile="full", debug=False)
    dwg.viewbox(0, 0, width, height)
    dwg.add(dwg.rect(
        insert=(0, 0), size=(_fmt(width), _fmt(height)),
        fill="white", stroke="black", stroke_width=_fmt(stroke),
    ))

    squares = dwg.g(fill="none", stroke="black", stroke_width=_fmt(stroke))
    labels = dwg.g(font_family="sans-serif", text_anchor="middle", dominant_baseline="central")
    for element in d.elements:
        side = element.size * scale
        x, y = element.x * scale, element.y * scale
        squares.add(dwg.rect(insert=(_fmt(x), _fmt(y)), size=(_fmt(side), _fmt(side))))
        label_size = font_size or max(side * 0.4, 1.0)
        labels.add(dwg.text(
            str(element.size),
            insert=(_fmt(x + side / 2), _fmt(y + side / 2)),
            font_size=_fmt(label_size),
        ))
    dwg.add(squares)
    dwg.add(labels)
    return dwg.tostring()


def write_svg(d: Dissection, path: Union[str, Path], **options) -> None:
    atomic_write_text(path, render_svg(d, **options))
    logger.info(f"Saved {d.width}x{d.height} drawing to {path}")
