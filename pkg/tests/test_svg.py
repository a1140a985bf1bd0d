"""
Tests for SVG rendering
"""

import re

from app.core.bouwkamp import parse_bouwkampcode, place_elements
from app.utils.svg import render_svg, write_svg


def test_one_rect_per_element(willcocks):
    svg = render_svg(willcocks, scale=1)
    assert svg.count("<rect") == willcocks.order + 1
    assert 'viewBox="0,0,175,175"' in svg or 'viewBox="0 0 175 175"' in svg


def test_labels_are_sizes(rectangle_33x32):
    svg = render_svg(rectangle_33x32, scale=3)
    labels = sorted(int(x) for x in re.findall(r">(\d+)</text>", svg))
    assert labels == sorted(rectangle_33x32.sizes)


def test_fixed_font_size():
    d = place_elements(parse_bouwkampcode("(2,1)(1)"))
    assert set(re.findall(r'font-size="([\d.]+)"', render_svg(d, scale=10, font_size=7))) == {"7"}
    scaled = set(re.findall(r'font-size="([\d.]+)"', render_svg(d, scale=10, font_size=0)))
    assert scaled == {"8", "4"}


def test_write_svg(tmp_path, rectangle_33x32):
    path = tmp_path / "nested" / "r.svg"
    write_svg(rectangle_33x32, path, scale=2, stroke=0.5)
    text = path.read_text()
    assert 'width="66"' in text
    assert 'height="64"' in text
    assert 'stroke-width="0.5"' in text
