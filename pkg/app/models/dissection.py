"""
Dissection models: placed squares, tilings, classifications and the symmetry group
"""

from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

Box = Tuple[int, int, int]
"""An element as a plain (x, y, size) triple."""


def reading_order(boxes: Iterable[Box]) -> Tuple[Box, ...]:
    """Sort boxes top-to-bottom, then left-to-right."""
    return tuple(sorted(boxes, key=lambda b: (b[1], b[0])))


class Symmetry(str, Enum):
    """The eight symmetries of the square, acting on a rectangle with y pointing down.

    Each one is an optional transpose followed by optional mirrors in x and y.
    Rotations are clockwise as seen on screen.
    """

    IDENTITY = "identity"
    ROT90 = "rot90"
    ROT180 = "rot180"
    ROT270 = "rot270"
    FLIP_X = "flip_x"
    FLIP_Y = "flip_y"
    TRANSPOSE = "transpose"
    ANTI_TRANSPOSE = "anti_transpose"

    @property
    def flags(self) -> Tuple[bool, bool, bool]:
        return _FLAGS[self]

    @property
    def swaps_axes(self) -> bool:
        return self.flags[0]

    @property
    def matrix(self) -> Tuple[int, int, int, int]:
        """Signed permutation matrix (row-major) acting on centred coordinates."""
        transpose, flip_x, flip_y = self.flags
        sx = -1 if flip_x else 1
        sy = -1 if flip_y else 1
        if transpose:
            return (0, sx, sy, 0)
        return (sx, 0, 0, sy)

    def after(self, first: "Symmetry") -> "Symmetry":
        """The symmetry that applies ``first`` and then ``self``."""
        a, b, c, d = self.matrix
        e, f, g, h = first.matrix
        return _BY_MATRIX[(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)]

    def inverse(self) -> "Symmetry":
        a, b, c, d = self.matrix
        # orthogonal, so the inverse is the transpose
        return _BY_MATRIX[(a, c, b, d)]

    def apply_to_size(self, width: int, height: int) -> Tuple[int, int]:
        return (height, width) if self.swaps_axes else (width, height)

    def apply_to_box(self, box: Box, width: int, height: int) -> Box:
        """Map one element of a ``width`` x ``height`` rectangle."""
        x, y, size = box
        transpose, flip_x, flip_y = self.flags
        if transpose:
            x, y = y, x
            width, height = height, width
        if flip_x:
            x = width - x - size
        if flip_y:
            y = height - y - size
        return (x, y, size)


_FLAGS: Dict[Symmetry, Tuple[bool, bool, bool]] = {
    Symmetry.IDENTITY: (False, False, False),
    Symmetry.ROT90: (True, True, False),
    Symmetry.ROT180: (False, True, True),
    Symmetry.ROT270: (True, False, True),
    Symmetry.FLIP_X: (False, True, False),
    Symmetry.FLIP_Y: (False, False, True),
    Symmetry.TRANSPOSE: (True, False, False),
    Symmetry.ANTI_TRANSPOSE: (True, True, True),
}

_BY_MATRIX: Dict[Tuple[int, int, int, int], Symmetry] = {s.matrix: s for s in Symmetry}

NON_SWAPPING = tuple(s for s in Symmetry if not s.swaps_axes)


class Element(BaseModel):
    """An axis-aligned square of a dissection"""

    model_config = ConfigDict(frozen=True)

    x: int = Field(..., ge=0, description="Offset from the left edge")
    y: int = Field(..., ge=0, description="Offset from the top edge")
    size: int = Field(..., ge=1, description="Side length")

    @property
    def box(self) -> Box:
        return (self.x, self.y, self.size)


class Dissection(BaseModel):
    """A rectangle tiled by squares; elements are kept in reading order"""

    model_config = ConfigDict(frozen=True)

    width: int = Field(..., ge=1)
    height: int = Field(..., ge=1)
    elements: Tuple[Element, ...] = Field(default=())

    @field_validator("elements")
    @classmethod
    def _sort_elements(cls, value: Tuple[Element, ...]) -> Tuple[Element, ...]:
        return tuple(sorted(value, key=lambda e: (e.y, e.x)))

    @classmethod
    def from_boxes(cls, width: int, height: int, boxes: Iterable[Box]) -> "Dissection":
        """Build without re-validating; ``boxes`` must hold non-negative coordinates and positive sizes."""
        elements = tuple(
            Element.model_construct(x=x, y=y, size=s) for x, y, s in reading_order(boxes)
        )
        return cls.model_construct(width=width, height=height, elements=elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def boxes(self) -> Tuple[Box, ...]:
        return tuple(e.box for e in self.elements)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(e.size for e in self.elements)

    @property
    def is_square(self) -> bool:
        return self.width == self.height


class ViolationKind(str, Enum):
    OVERLAP = "overlap"
    GAP = "gap"
    AREA_MISMATCH = "area_mismatch"
    OUT_OF_BOUNDS = "out_of_bounds"
    TOO_FEW_ELEMENTS = "too_few_elements"


class Violation(BaseModel):
    kind: ViolationKind
    element_indices: Tuple[int, ...] = Field(default=())
    region: Optional[Tuple[int, int, int, int]] = Field(
        None, description="Uncovered (x, y, w, h) cell for gap violations"
    )
    message: str = ""


class ValidationReport(BaseModel):
    ok: bool
    violations: List[Violation] = Field(default_factory=list)

    def kinds(self) -> List[ViolationKind]:
        return sorted({v.kind for v in self.violations}, key=lambda k: k.value)


class Perfection(str, Enum):
    PERFECT = "perfect"
    IMPERFECT = "imperfect"


class Structure(str, Enum):
    SIMPLE = "simple"
    COMPOUND = "compound"


class Shape(str, Enum):
    SQUARE = "square"
    OBLONG = "oblong"


class Classification(BaseModel):
    model_config = ConfigDict(frozen=True)

    perfection: Perfection
    structure: Structure
    shape: Shape
    type_code: Optional[str] = Field(None, description="Dn, DDn, T2(a), T2(b) or T2(c)")

    @property
    def flags(self) -> str:
        """Two-letter summary, e.g. ``CP`` for compound perfect."""
        return (
            ("C" if self.structure == Structure.COMPOUND else "S")
            + ("P" if self.perfection == Perfection.PERFECT else "I")
        )


class SubrectangleRegion(BaseModel):
    """A proper sub-rectangle exactly tiled by two or more elements"""

    model_config = ConfigDict(frozen=True)

    x: int
    y: int
    w: int = Field(..., ge=1)
    h: int = Field(..., ge=1)
    member_indices: Tuple[int, ...]
    maximal: bool = True

    @property
    def area(self) -> int:
        return self.w * self.h

    @property
    def bounds(self) -> Tuple[int, int, int, int]:
        return (self.x, self.y, self.w, self.h)

    def contains(self, other: "SubrectangleRegion") -> bool:
        return (
            self.x <= other.x
            and self.y <= other.y
            and other.x + other.w <= self.x + self.w
            and other.y + other.h <= self.y + self.h
        )
