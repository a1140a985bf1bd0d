"""Request and response models for the HTTP API"""
from typing import List, Optional

from pydantic import BaseModel, Field

from app.core.config import settings
from app.models.dissection import Classification, ValidationReport


class CodeRequest(BaseModel):
    code: str = Field(..., description="Bouwkampcode or tablecode", max_length=settings.MAX_CODE_LENGTH)


class RenderRequest(CodeRequest):
    scale: Optional[float] = Field(None, gt=0, description="Pixels per unit")
    stroke: Optional[float] = Field(None, ge=0)
    font_size: Optional[float] = Field(None, ge=0, description="0 scales labels with their squares")


class ValidateResponse(BaseModel):
    report: ValidationReport
    classification: Optional[Classification] = None


class CanonicalResponse(BaseModel):
    tablecode: str
    bouwkampcode: str
    isomer_count: int


class IsomersResponse(BaseModel):
    isomers: List[str]
    total: int


class CodesResponse(BaseModel):
    codes: List[str] = Field(..., description="One Bouwkampcode per symmetry, identity first")


class SolveRequest(BaseModel):
    rotation: List[List[int]] = Field(..., description="Clockwise 1-based neighbour lists, one per vertex")
    datum: Optional[int] = Field(None, ge=1, description="1-based datum node, last by default")


class SolutionItem(BaseModel):
    branch: int = Field(..., description="1-based polar branch")
    tail: int
    head: int
    width: int
    height: int
    reduction: int
    currents: List[int]
    is_square: bool


class RectangleItem(BaseModel):
    branch: int
    tablecode: str
    flags: str


class SolveResponse(BaseModel):
    nodes: int
    branches: int
    complexity: int
    solutions: List[SolutionItem]
    rectangles: List[RectangleItem]
    crossed_rows: List[int]
    equal_potential_rows: List[int]
