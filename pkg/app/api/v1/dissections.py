"""
Dissection endpoints: validation, canonical form, isomers, codes and drawings
"""

import logging

from fastapi import APIRouter
from fastapi.responses import Response

from app.core.bouwkamp import (
    emit_all_codes,
    emit_bouwkampcode,
    format_record,
    parse_record,
    place_elements,
    tablecode_of,
)
from app.core.dissection import classify, require_tiling, validate_tiling
from app.core.isomers import canonicalize, enumerate_isomers
from app.models.api import (
    CanonicalResponse,
    CodeRequest,
    CodesResponse,
    IsomersResponse,
    RenderRequest,
    ValidateResponse,
)
from app.models.dissection import Dissection
from app.utils.svg import render_svg

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/dissections", tags=["Dissections"])


def _placed(code: str) -> Dissection:
    return place_elements(parse_record(code))


def _tiling(code: str) -> Dissection:
    d = _placed(code)
    require_tiling(d)
    return d


@router.post("/validate", response_model=ValidateResponse)
async def validate(request: CodeRequest):
    """Tiling report, plus the classification when the tiling is valid"""
    d = _placed(request.code)
    report = validate_tiling(d)
    classification = classify(d) if report.ok else None
    return ValidateResponse(report=report, classification=classification)


@router.post("/canonical", response_model=CanonicalResponse)
async def canonical(request: CodeRequest):
    form = canonicalize(_tiling(request.code))
    logger.info(f"Canonical form {form.tablecode.text()} ({form.isomer_count} isomers)")
    return CanonicalResponse(
        tablecode=form.tablecode.text(),
        bouwkampcode=format_record(emit_bouwkampcode(form.dissection)),
        isomer_count=form.isomer_count,
    )


@router.post("/isomers", response_model=IsomersResponse)
async def isomers(request: CodeRequest):
    found = [tablecode_of(d).text() for d in enumerate_isomers(_tiling(request.code))]
    return IsomersResponse(isomers=found, total=len(found))


@router.post("/codes", response_model=CodesResponse)
async def codes(request: CodeRequest):
    return CodesResponse(codes=emit_all_codes(_tiling(request.code)))


@router.post("/render")
async def render(request: RenderRequest):
    svg = render_svg(
        _tiling(request.code),
        scale=request.scale,
        stroke=request.stroke,
        font_size=request.font_size,
    )
    return Response(content=svg, media_type="image/svg+xml")
