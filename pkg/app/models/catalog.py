"""Catalog and enumeration-run models"""
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.models.code import TablecodeLine
from app.models.dissection import Classification, Structure


class CatalogEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    tablecode: TablecodeLine = Field(..., description="Canonical tablecode")
    id: Optional[str] = Field(None, description="Size plus letter, e.g. 175a")
    isomer_count: int = Field(..., ge=1)
    classification: Classification
    provenance: Tuple[Tuple[str, str], ...] = Field(
        default=(), description="Extra metadata carried through, e.g. discoverer and years"
    )

    @property
    def key(self) -> str:
        return self.tablecode.text()

    @property
    def size(self) -> int:
        return self.tablecode.width

    @property
    def is_compound(self) -> bool:
        return self.classification.structure == Structure.COMPOUND

    def metadata(self) -> Dict[str, str]:
        items: Dict[str, str] = {}
        if self.id is not None:
            items["id"] = self.id
        items["isomers"] = str(self.isomer_count)
        if self.classification.type_code is not None:
            items["type"] = self.classification.type_code
        items.update(self.provenance)
        return items


class RunStats(BaseModel):
    graphs_processed: int = 0
    graphs_skipped: int = Field(0, description="Graphs rejected by the class filter")
    rows_solved: int = Field(0, description="Rows with every current nonzero")
    crossed_rows: int = 0
    squares_found: int = 0
    perfect_squares: int = 0
    compound_perfect: int = 0
    distinct_after_dedup: int = 0
    elapsed: float = 0.0

    def add(self, other: "RunStats") -> None:
        for name in RunStats.model_fields:
            if name not in ("distinct_after_dedup", "elapsed"):
                setattr(self, name, getattr(self, name) + getattr(other, name))


class OrderStats(BaseModel):
    order: int
    entries: int = 0
    isomers: int = 0
    compound: int = 0
    simple: int = 0
    types: Dict[str, int] = Field(default_factory=dict)
