"""
Geometry of square dissections: tiling validation, subrectangle search,
classification and the symmetry actions behind isomer classes.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.core.exceptions import BadSelector, InvalidTiling
from app.models.dissection import (
    Box,
    Classification,
    Dissection,
    Perfection,
    Shape,
    Structure,
    SubrectangleRegion,
    Symmetry,
    ValidationReport,
    Violation,
    ViolationKind,
)

logger = logging.getLogger(__name__)

Region = Tuple[int, int, int, int, Tuple[int, ...]]
"""(x, y, w, h, member indices) as produced by :func:`find_regions`."""

MIN_BOUNDARY_ELEMENT = 5
MIN_CORNER_ELEMENT = 9


def validate_tiling(d: Dissection) -> ValidationReport:
    """Check that the elements tile ``d.width`` x ``d.height`` exactly."""
    violations: List[Violation] = []
    boxes = d.boxes

    if len(boxes) < 2:
        violations.append(Violation(
            kind=ViolationKind.TOO_FEW_ELEMENTS,
            element_indices=tuple(range(len(boxes))),
            message=f"a dissection needs at least 2 elements, got {len(boxes)}",
        ))

    for i, (x, y, s) in enumerate(boxes):
        if x < 0 or y < 0 or x + s > d.width or y + s > d.height:
            violations.append(Violation(
                kind=ViolationKind.OUT_OF_BOUNDS,
                element_indices=(i,),
                message=f"element {i} ({s} at {x},{y}) leaves the {d.width}x{d.height} rectangle",
            ))

    area = sum(s * s for _, _, s in boxes)
    if area != d.width * d.height:
        violations.append(Violation(
            kind=ViolationKind.AREA_MISMATCH,
            message=f"element area {area} != rectangle area {d.width * d.height}",
        ))

    violations.extend(_overlaps(boxes))
    violations.extend(_gaps(d.width, d.height, boxes))

    return ValidationReport(ok=not violations, violations=violations)


def _overlaps(boxes: Sequence[Box]) -> List[Violation]:
    found = []
    # boxes are in reading order, so a box can only overlap later boxes starting above its bottom edge
    for i, (x1, y1, s1) in enumerate(boxes):
        for j in range(i + 1, len(boxes)):
            x2, y2, s2 = boxes[j]
            if y2 >= y1 + s1:
                break
            if x1 < x2 + s2 and x2 < x1 + s1 and y1 < y2 + s2 and y2 < y1 + s1:
                found.append(Violation(
                    kind=ViolationKind.OVERLAP,
                    element_indices=(i, j),
                    message=f"elements {i} and {j} overlap",
                ))
    return found


def _gaps(width: int, height: int, boxes: Sequence[Box]) -> List[Violation]:
    """Locate uncovered cells on the grid compressed to element edges."""

    def clamp(v: int, limit: int) -> int:
        return min(max(v, 0), limit)

    xs = sorted({0, width, *(clamp(x, width) for x, _, _ in boxes),
                 *(clamp(x + s, width) for x, _, s in boxes)})
    ys = sorted({0, height, *(clamp(y, height) for _, y, _ in boxes),
                 *(clamp(y + s, height) for _, y, s in boxes)})
    covered = np.zeros((len(ys) - 1, len(xs) - 1), dtype=bool)
    x_index = {v: k for k, v in enumerate(xs)}
    y_index = {v: k for k, v in enumerate(ys)}
    for x, y, s in boxes:
        x0, x1 = x_index[clamp(x, width)], x_index[clamp(x + s, width)]
        y0, y1 = y_index[clamp(y, height)], y_index[clamp(y + s, height)]
        covered[y0:y1, x0:x1] = True

    found = []
    for row, col in zip(*np.nonzero(~covered)):
        cell = (xs[col], ys[row], xs[col + 1] - xs[col], ys[row + 1] - ys[row])
        found.append(Violation(
            kind=ViolationKind.GAP,
            region=cell,
            message=f"uncovered {cell[2]}x{cell[3]} cell at {cell[0]},{cell[1]}",
        ))
    return found


def require_tiling(d: Dissection) -> None:
    report = validate_tiling(d)
    if not report.ok:
        kinds = ", ".join(k.value for k in report.kinds())
        raise InvalidTiling(f"not an exact tiling of {d.width}x{d.height}: {kinds}", report)


def find_regions(width: int, height: int, boxes: Sequence[Box]) -> List[Region]:
    """All proper sub-rectangles exactly tiled by two or more of ``boxes``.

    A region's top-left corner is some element's top-left corner and its
    bottom-right corner some element's bottom-right corner, so every pair of
    elements is a candidate. A candidate qualifies when the elements inside it
    cover its whole area.
    """
    if len(boxes) < 3:
        return []
    arr = np.asarray(boxes, dtype=np.int64)
    x, y, s = arr[:, 0], arr[:, 1], arr[:, 2]
    x2, y2, area = x + s, y + s, s * s

    # candidate (a, b): a gives the top-left corner, b the bottom-right one
    cx0, cy0 = x[:, None], y[:, None]
    cx1, cy1 = x2[None, :], y2[None, :]
    inside = (
        (x[None, None, :] >= cx0[:, :, None])
        & (y[None, None, :] >= cy0[:, :, None])
        & (x2[None, None, :] <= cx1[:, :, None])
        & (y2[None, None, :] <= cy1[:, :, None])
    )
    covered = (inside * area[None, None, :]).sum(axis=2)
    count = inside.sum(axis=2)
    region_area = (cx1 - cx0) * (cy1 - cy0)
    hits = (
        (cx1 > cx0) & (cy1 > cy0)
        & (covered == region_area)
        & (count >= 2)
        & (region_area < width * height)
    )

    regions = []
    for a, b in zip(*np.nonzero(hits)):
        members = tuple(int(k) for k in np.nonzero(inside[a, b])[0])
        regions.append((int(x[a]), int(y[a]), int(x2[b] - x[a]), int(y2[b] - y[a]), members))
    regions.sort(key=lambda r: (r[1], r[0], r[2], r[3]))
    return regions


def find_subrectangles(d: Dissection) -> List[SubrectangleRegion]:
    """Every proper squared subrectangle of ``d``; outermost ones are flagged maximal."""
    require_tiling(d)
    return _to_models(find_regions(d.width, d.height, d.boxes))


def _to_models(regions: Sequence[Region]) -> List[SubrectangleRegion]:
    models = [
        SubrectangleRegion(x=rx, y=ry, w=rw, h=rh, member_indices=members)
        for rx, ry, rw, rh, members in regions
    ]
    return [
        r.model_copy(update={
            "maximal": not any(o is not r and o.contains(r) and o.area > r.area for o in models)
        })
        for r in models
    ]


def classify(d: Dissection) -> Classification:
    require_tiling(d)
    sizes = d.sizes
    perfection = Perfection.PERFECT if len(set(sizes)) == len(sizes) else Perfection.IMPERFECT
    shape = Shape.SQUARE if d.is_square else Shape.OBLONG
    regions = _to_models(find_regions(d.width, d.height, d.boxes))
    structure = Structure.COMPOUND if regions else Structure.SIMPLE

    type_code = None
    if structure == Structure.COMPOUND and shape == Shape.SQUARE:
        type_code = _type_code(d, regions)
    return Classification(
        perfection=perfection, structure=structure, shape=shape, type_code=type_code
    )


def _type_code(d: Dissection, regions: List[SubrectangleRegion]) -> Optional[str]:
    maximal = [r for r in regions if r.maximal]
    if len(maximal) == 1:
        return f"D{d.order - len(maximal[0].member_indices)}"
    if len(maximal) != 2:
        logger.debug(f"{len(maximal)} maximal subrectangles, no type code")
        return None

    first, second = maximal
    shared = set(first.member_indices) & set(second.member_indices)
    if shared:
        return None
    outside = d.order - len(first.member_indices) - len(second.member_indices)
    if outside > 0:
        return f"DD{outside}"
    trivial = sum(_trivially_compound(r, regions) for r in maximal)
    return f"T2({'abc'[trivial]})"


def _trivially_compound(region: SubrectangleRegion, regions: List[SubrectangleRegion]) -> bool:
    """One element plus a proper squared subrectangle make up the region."""
    size = len(region.member_indices)
    return any(
        other is not region
        and region.contains(other)
        and len(other.member_indices) == size - 1
        for other in regions
    )


def transform(
    d: Dissection,
    sym: Symmetry,
    region: Optional[SubrectangleRegion] = None,
) -> Dissection:
    """Apply ``sym`` to the whole dissection, or only to the contents of ``region``."""
    if region is None:
        return Dissection.from_boxes(*apply_symmetry(d.width, d.height, d.boxes, sym))

    members = region.member_indices
    if any(i < 0 or i >= d.order for i in members) or len(set(members)) != len(members):
        raise BadSelector(f"region {region.bounds} does not belong to this dissection")
    rx, ry, rw, rh = region.bounds
    boxes = [d.boxes[i] for i in members]
    inside = all(
        rx <= x and ry <= y and x + s <= rx + rw and y + s <= ry + rh for x, y, s in boxes
    )
    if not inside or sum(s * s for _, _, s in boxes) != rw * rh:
        raise BadSelector(
            f"elements {list(members)} do not tile the {rw}x{rh} region at {rx},{ry}"
        )
    if sym.swaps_axes and region.w != region.h:
        raise BadSelector(
            f"{sym.value} does not fit the {region.w}x{region.h} slot at {region.x},{region.y}"
        )
    return Dissection.from_boxes(
        d.width, d.height, reorient_region(d.boxes, region.bounds, region.member_indices, sym)
    )


def apply_symmetry(
    width: int, height: int, boxes: Sequence[Box], sym: Symmetry
) -> Tuple[int, int, List[Box]]:
    new_width, new_height = sym.apply_to_size(width, height)
    return new_width, new_height, [sym.apply_to_box(b, width, height) for b in boxes]


def reorient_region(
    boxes: Sequence[Box],
    bounds: Tuple[int, int, int, int],
    members: Sequence[int],
    sym: Symmetry,
) -> List[Box]:
    rx, ry, rw, rh = bounds
    moved = list(boxes)
    for i in members:
        x, y, s = boxes[i]
        nx, ny, _ = sym.apply_to_box((x - rx, y - ry, s), rw, rh)
        moved[i] = (nx + rx, ny + ry, s)
    return moved


def boundary_elements(d: Dissection) -> List[int]:
    """Indices of the elements touching the outer boundary."""
    return [
        i for i, (x, y, s) in enumerate(d.boxes)
        if x == 0 or y == 0 or x + s == d.width or y + s == d.height
    ]


def corner_elements(d: Dissection) -> List[int]:
    corners = {(0, 0), (d.width, 0), (0, d.height), (d.width, d.height)}
    found = []
    for i, (x, y, s) in enumerate(d.boxes):
        if {(x, y), (x + s, y), (x, y + s), (x + s, y + s)} & corners:
            found.append(i)
    return found


def gambini_violations(d: Dissection) -> List[str]:
    """Breaches of the smallest possible boundary and corner elements of a perfect squared square."""
    problems = []
    sizes = d.sizes
    smallest_boundary = min(sizes[i] for i in boundary_elements(d))
    if smallest_boundary < MIN_BOUNDARY_ELEMENT:
        problems.append(f"boundary element {smallest_boundary} < {MIN_BOUNDARY_ELEMENT}")
    smallest_corner = min(sizes[i] for i in corner_elements(d))
    if smallest_corner < MIN_CORNER_ELEMENT:
        problems.append(f"corner element {smallest_corner} < {MIN_CORNER_ELEMENT}")
    return problems
