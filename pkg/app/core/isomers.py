"""
Isomer classes and canonical representatives.

Isomers arise from re-orienting squared subrectangles independently of the
rest of the dissection. The class is explored as a closure: every region of
every reached state is re-oriented in every way its slot admits, and regions
are searched again in each new state.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Set, Tuple

from app.core.bouwkamp import tablecode_of
from app.core.config import settings
from app.core.dissection import apply_symmetry, find_regions, reorient_region, require_tiling
from app.core.exceptions import ResourceLimit
from app.models.code import CanonicalForm
from app.models.dissection import NON_SWAPPING, Box, Dissection, Symmetry, reading_order

logger = logging.getLogger(__name__)

State = Tuple[Box, ...]
Oriented = Tuple[Tuple[int, ...], int, int, State]
"""(sizes in reading order, width, height, boxes) of one orientation."""


def _catalog_symmetries(width: int, height: int) -> List[Symmetry]:
    """Orientations a catalog may list: all eight for a square, landscape ones otherwise."""
    if width == height:
        return list(Symmetry)
    landscape = []
    for sym in Symmetry:
        w, h = sym.apply_to_size(width, height)
        if w > h:
            landscape.append(sym)
    return landscape


def best_orientation(width: int, height: int, boxes: Sequence[Box]) -> Oriented:
    """The orientation with the highest zero-padded tablecode.

    All candidate tablecodes share one padding width, so comparing the size
    tuples numerically gives the same order as comparing the padded strings.
    """
    best: Optional[Oriented] = None
    for sym in _catalog_symmetries(width, height):
        w, h, moved = apply_symmetry(width, height, boxes, sym)
        ordered = reading_order(moved)
        sizes = tuple(s for _, _, s in ordered)
        if best is None or sizes > best[0]:
            best = (sizes, w, h, ordered)
        elif sizes == best[0]:
            assert ordered == best[3], "equal tablecodes must place identically"
    return best


def isomer_closure(d: Dissection, limit: Optional[int] = None) -> Set[State]:
    """Every element arrangement reachable by re-orienting subrectangles of ``d``."""
    require_tiling(d)
    limit = limit or settings.MAX_ISOMER_STATES
    start = reading_order(d.boxes)
    seen = {start}
    queue = deque([start])
    while queue:
        boxes = queue.popleft()
        for rx, ry, rw, rh, members in find_regions(d.width, d.height, boxes):
            symmetries = list(Symmetry) if rw == rh else NON_SWAPPING
            for sym in symmetries:
                if sym is Symmetry.IDENTITY:
                    continue
                moved = reading_order(reorient_region(boxes, (rx, ry, rw, rh), members, sym))
                if moved not in seen:
                    seen.add(moved)
                    queue.append(moved)
        if len(seen) > limit:
            raise ResourceLimit(
                f"isomer closure of a {d.width}x{d.height} order-{d.order} dissection "
                f"exceeds {limit} states"
            )
    return seen


def _classes(d: Dissection) -> Dict[Tuple[int, ...], Oriented]:
    classes: Dict[Tuple[int, ...], Oriented] = {}
    for state in isomer_closure(d):
        oriented = best_orientation(d.width, d.height, state)
        classes.setdefault(oriented[0], oriented)
    return classes


def _to_dissection(oriented: Oriented) -> Dissection:
    _, width, height, boxes = oriented
    return Dissection.from_boxes(width, height, boxes)


def enumerate_isomers(d: Dissection) -> List[Dissection]:
    """Members of the isomer class up to the 8 square symmetries, highest tablecode first."""
    classes = _classes(d)
    isomers = [_to_dissection(classes[key]) for key in sorted(classes, reverse=True)]
    logger.debug(f"{d.width}x{d.height} order {d.order}: {len(isomers)} isomers")
    return isomers


def canonicalize(d: Dissection) -> CanonicalForm:
    classes = _classes(d)
    top = classes[max(classes)]
    canonical = _to_dissection(top)
    line = tablecode_of(canonical)
    digits = len(str(max(line.width, line.height)))
    assert max(line.sizes) < 10 ** digits, "padding width too small for the element sizes"
    return CanonicalForm(tablecode=line, dissection=canonical, isomer_count=len(classes))
