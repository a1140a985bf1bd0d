"""
Bouwkampcode and tablecode models
"""

from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.models.dissection import Dissection

# metadata keys with a dedicated field; anything else lands in ``extra``
KNOWN_KEYS = {
    "id": "id",
    "isomers": "isomer_count",
    "type": "type_code",
    "discoverer": "discoverer",
    "years": "years",
}


class ExtendedFields(BaseModel):
    """Optional header and catalog metadata of a code record"""

    model_config = ConfigDict(frozen=True)

    order: Optional[int] = Field(None, ge=1)
    width: Optional[int] = Field(None, ge=1)
    height: Optional[int] = Field(None, ge=1)
    id: Optional[str] = Field(None, description="Catalog ID, e.g. 175a")
    isomer_count: Optional[int] = Field(None, ge=1)
    type_code: Optional[str] = None
    discoverer: Optional[str] = None
    years: Optional[str] = None
    extra: Tuple[Tuple[str, str], ...] = Field(
        default=(), description="Unrecognised key=value pairs in input order"
    )

    def metadata(self) -> Dict[str, str]:
        """Catalog metadata in canonical key order, unknown keys last."""
        items: Dict[str, str] = {}
        for key, attr in KNOWN_KEYS.items():
            value = getattr(self, attr)
            if value is not None:
                items[key] = str(value)
        items.update(self.extra)
        return items


class BouwkampCode(BaseModel):
    """Element sizes grouped by the horizontal segment they rest on"""

    model_config = ConfigDict(frozen=True)

    groups: Tuple[Tuple[int, ...], ...]
    extended: ExtendedFields = Field(default_factory=ExtendedFields)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(s for group in self.groups for s in group)

    @property
    def order(self) -> int:
        return sum(len(group) for group in self.groups)

    def text(self) -> str:
        return "".join("(" + ",".join(str(s) for s in group) + ")" for group in self.groups)


class TablecodeLine(BaseModel):
    """Parenthesis-free code: order, width, height, then sizes in reading order"""

    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=2)
    width: int = Field(..., ge=1)
    height: int = Field(..., ge=1)
    sizes: Tuple[int, ...]

    def text(self) -> str:
        return " ".join(str(v) for v in (self.order, self.width, self.height, *self.sizes))

    def padded(self) -> str:
        """Sizes zero-padded to the digit count of the longer side and concatenated."""
        digits = len(str(max(self.width, self.height)))
        return "".join(str(s).zfill(digits) for s in self.sizes)

    def numeric_key(self) -> Tuple[int, ...]:
        return (self.order, self.width, self.height, *self.sizes)

    def __str__(self) -> str:
        return self.text()


class CanonicalForm(BaseModel):
    """Canonical representative of an isomer class"""

    model_config = ConfigDict(frozen=True)

    tablecode: TablecodeLine
    dissection: Dissection
    isomer_count: int = Field(..., ge=1)
