"""
Bouwkampcode and tablecode: parsing, skyline placement and emission
"""

import logging
import re
from typing import Dict, List, Optional, Sequence, Tuple, Union

from app.core.dissection import apply_symmetry, require_tiling
from app.core.exceptions import BouwkampSyntaxError, PlacementError
from app.models.code import KNOWN_KEYS, BouwkampCode, ExtendedFields, TablecodeLine
from app.models.dissection import Box, Dissection, Symmetry

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<int>[-+]?\d+)|(?P<sym>[(),])|(?P<bad>\S))")


def _split_metadata(text: str) -> Tuple[str, Optional[str], int]:
    """Separate the record body from a trailing ``# key=value`` comment."""
    hash_at = text.find("#")
    if hash_at < 0:
        return text, None, len(text)
    return text[:hash_at], text[hash_at + 1:], hash_at + 1


def _tokens(body: str):
    pos = 0
    while pos < len(body):
        match = _TOKEN.match(body, pos)
        if match is None or match.end() == pos:
            # only trailing whitespace is left
            break
        pos = match.end()
        if match.group("int") is not None:
            yield "int", match.group("int"), match.start("int")
        elif match.group("sym") is not None:
            yield match.group("sym"), match.group("sym"), match.start("sym")
        else:
            yield "bad", match.group("bad"), match.start("bad")


def _positive(value: str, position: int) -> int:
    number = int(value)
    if number <= 0:
        raise BouwkampSyntaxError(f"element size must be a positive integer, got {value}", position)
    return number


def _parse_metadata(comment: Optional[str], offset: int) -> Dict[str, str]:
    pairs: Dict[str, str] = {}
    if comment is None:
        return pairs
    for match in re.finditer(r"\S+", comment):
        key, sep, value = match.group(0).partition("=")
        if not sep or not key:
            raise BouwkampSyntaxError(
                f"metadata item {match.group(0)!r} is not key=value", offset + match.start()
            )
        pairs[key] = value
    return pairs


def _extended(
    header: Sequence[int], metadata: Dict[str, str], position: int
) -> ExtendedFields:
    fields: Dict[str, object] = {}
    if header:
        fields.update(order=header[0], width=header[1], height=header[2])
    extra = []
    for key, value in metadata.items():
        attr = KNOWN_KEYS.get(key)
        if attr is None:
            extra.append((key, value))
        elif attr == "isomer_count":
            if not value.isdigit() or int(value) < 1:
                raise BouwkampSyntaxError(f"isomers must be a positive integer, got {value!r}", position)
            fields[attr] = int(value)
        else:
            fields[attr] = value
    return ExtendedFields(**fields, extra=tuple(extra))


def parse_bouwkampcode(text: str) -> BouwkampCode:
    """Parse ``[order width height] (a,b,...)(c,...)... [# key=value ...]``."""
    body, comment, comment_at = _split_metadata(text)
    header: List[Tuple[int, int]] = []
    groups: List[Tuple[int, ...]] = []
    current: Optional[List[int]] = None
    expect_value = False

    for kind, value, position in _tokens(body):
        if kind == "bad":
            raise BouwkampSyntaxError(f"unexpected character {value!r}", position)
        if current is None:
            if kind == "int":
                if groups:
                    raise BouwkampSyntaxError("integer outside a group", position)
                header.append((_positive(value, position), position))
            elif kind == "(":
                current = []
                expect_value = True
            else:
                raise BouwkampSyntaxError(f"unexpected {value!r} outside a group", position)
            continue

        if kind == "int":
            if not expect_value:
                raise BouwkampSyntaxError("missing ',' between elements", position)
            current.append(_positive(value, position))
            expect_value = False
        elif kind == ",":
            if expect_value:
                raise BouwkampSyntaxError("expected an element size", position)
            expect_value = True
        elif kind == ")":
            if not current:
                raise BouwkampSyntaxError("empty group", position)
            if expect_value:
                raise BouwkampSyntaxError("expected an element size", position)
            groups.append(tuple(current))
            current = None
        else:
            raise BouwkampSyntaxError("nested '(' inside a group", position)

    if current is not None:
        raise BouwkampSyntaxError("unbalanced '(' at end of input", len(body))
    if not groups:
        raise BouwkampSyntaxError("no element groups", len(body))
    if header and len(header) != 3:
        raise BouwkampSyntaxError(
            f"expected 'order width height' before the first group, got {len(header)} integers",
            header[0][1],
        )

    extended = _extended([v for v, _ in header], _parse_metadata(comment, comment_at), comment_at)
    code = BouwkampCode(groups=tuple(groups), extended=extended)
    if extended.order is not None and extended.order != code.order:
        raise BouwkampSyntaxError(
            f"order field is {extended.order} but the code lists {code.order} elements",
            header[0][1],
        )
    return code


def parse_tablecode(text: str) -> Tuple[TablecodeLine, ExtendedFields]:
    """Parse ``order width height s1 ... sk [# key=value ...]``."""
    body, comment, comment_at = _split_metadata(text)
    numbers = []
    for kind, value, position in _tokens(body):
        if kind != "int":
            raise BouwkampSyntaxError(f"unexpected {value!r} in tablecode", position)
        numbers.append(_positive(value, position))
    if len(numbers) < 5:
        raise BouwkampSyntaxError("a tablecode needs order, width, height and two sizes", len(body))
    order, width, height, *sizes = numbers
    if order != len(sizes):
        raise BouwkampSyntaxError(
            f"order field is {order} but the line lists {len(sizes)} sizes", 0
        )
    extended = _extended(numbers[:3], _parse_metadata(comment, comment_at), comment_at)
    return TablecodeLine(order=order, width=width, height=height, sizes=tuple(sizes)), extended


def parse_record(text: str) -> BouwkampCode:
    """Parse either record form; a tablecode is placed and regrouped into a Bouwkampcode."""
    if "(" in text.split("#", 1)[0]:
        return parse_bouwkampcode(text)
    line, extended = parse_tablecode(text)
    d = place_sizes(line.sizes, line.width, line.height)
    return emit_bouwkampcode(d).model_copy(update={"extended": extended})


def _place(
    sizes: Sequence[int],
    width: int,
    height: Optional[int],
    groups: Optional[Sequence[Sequence[int]]] = None,
) -> List[Box]:
    """Skyline placement: each element goes to the left end of the highest free segment."""
    skyline = [[0, width, 0]]  # [x0, x1, y], merged, sorted by x
    boxes: List[Box] = []
    group_of = []
    if groups is not None:
        for g, group in enumerate(groups):
            group_of.extend([g] * len(group))

    for index, size in enumerate(sizes):
        k = min(range(len(skyline)), key=lambda i: (skyline[i][2], skyline[i][0]))
        x0, x1, y = skyline[k]
        if x0 + size > x1:
            raise PlacementError(
                f"element {index} (size {size}) does not fit the {x1 - x0}-wide segment at {x0},{y}",
                index,
            )
        if height is not None and y + size > height:
            raise PlacementError(
                f"element {index} (size {size}) at {x0},{y} crosses the bottom edge {height}",
                index,
            )
        if group_of and index > 0 and group_of[index] == group_of[index - 1]:
            px, py, ps = boxes[-1]
            if (py, px + ps) != (y, x0):
                raise PlacementError(f"group {group_of[index] + 1} overruns its segment", index)
        boxes.append((x0, y, size))

        replacement = [[x0, x0 + size, y + size]]
        if x0 + size < x1:
            replacement.append([x0 + size, x1, y])
        skyline[k:k + 1] = replacement
        skyline = _merge(skyline)

    final_height = height if height is not None else skyline[0][2]
    if len(skyline) != 1 or skyline[0][2] != final_height:
        raise PlacementError(
            f"leftover gap: the bottom edge is uneven after placing {len(sizes)} elements"
        )
    return boxes


def _merge(skyline: List[List[int]]) -> List[List[int]]:
    merged = [skyline[0]]
    for seg in skyline[1:]:
        if seg[2] == merged[-1][2] and seg[0] == merged[-1][1]:
            merged[-1] = [merged[-1][0], seg[1], seg[2]]
        else:
            merged.append(seg)
    return merged


def place_sizes(sizes: Sequence[int], width: int, height: Optional[int] = None) -> Dissection:
    """Place a flat size list (tablecode order) into a ``width`` wide rectangle."""
    boxes = _place(sizes, width, height)
    final_height = height if height is not None else max(y + s for _, y, s in boxes)
    return Dissection.from_boxes(width, final_height, boxes)


def place_elements(code: BouwkampCode) -> Dissection:
    ext = code.extended
    first_row = sum(code.groups[0])
    width = ext.width if ext.width is not None else first_row
    if first_row != width:
        raise PlacementError(
            f"first group spans {first_row} but the width is {width}", len(code.groups[0]) - 1
        )
    boxes = _place(code.sizes, width, ext.height, code.groups)
    height = ext.height if ext.height is not None else max(y + s for _, y, s in boxes)
    d = Dissection.from_boxes(width, height, boxes)
    logger.debug(f"placed {d.order} elements into {d.width}x{d.height}")
    return d


def _groups_of(d: Dissection) -> Tuple[Tuple[int, ...], ...]:
    groups: List[List[int]] = []
    previous: Optional[Box] = None
    for x, y, s in d.boxes:
        if previous is not None and previous[1] == y and previous[0] + previous[2] == x:
            groups[-1].append(s)
        else:
            groups.append([s])
        previous = (x, y, s)
    return tuple(tuple(g) for g in groups)


def emit_bouwkampcode(d: Dissection) -> BouwkampCode:
    """Group elements by shared top edge; a crossed segment is emitted merged."""
    return BouwkampCode(
        groups=_groups_of(d),
        extended=ExtendedFields(order=d.order, width=d.width, height=d.height),
    )


def emit_all_codes(d: Dissection) -> List[str]:
    """One Bouwkampcode per square symmetry, in :class:`Symmetry` order."""
    require_tiling(d)
    codes = []
    for sym in Symmetry:
        oriented = Dissection.from_boxes(*apply_symmetry(d.width, d.height, d.boxes, sym))
        codes.append(emit_bouwkampcode(oriented).text())
    return codes


def tablecode_of(d: Dissection) -> TablecodeLine:
    return TablecodeLine(order=d.order, width=d.width, height=d.height, sizes=d.sizes)


def to_tablecode(source: Union[BouwkampCode, Dissection, str]) -> TablecodeLine:
    if isinstance(source, str):
        source = parse_record(source)
    if isinstance(source, BouwkampCode):
        source = place_elements(source)
    return tablecode_of(source)


def format_record(
    code: Union[TablecodeLine, BouwkampCode], metadata: Optional[Dict[str, str]] = None
) -> str:
    """Render a catalog line, optionally with a trailing ``# key=value`` comment."""
    if isinstance(code, BouwkampCode):
        ext = code.extended
        prefix = ""
        if ext.width is not None and ext.height is not None:
            prefix = f"{code.order} {ext.width} {ext.height} "
        text = prefix + code.text()
    else:
        text = code.text()
    if metadata:
        text += " # " + " ".join(f"{k}={v}" for k, v in metadata.items())
    return text
