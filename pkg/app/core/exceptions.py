"""
Exception hierarchy and HTTP exception handlers for squarenet
"""

import logging
from typing import Any, Dict, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

logger = logging.getLogger(__name__)


class SquaringError(Exception):
    """Base exception for all toolkit errors"""

    slug = "squaring_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidTiling(SquaringError):
    """Raised when an operation needs a valid tiling and did not get one"""

    slug = "invalid_tiling"

    def __init__(self, message: str, report: Any = None):
        details = {}
        if report is not None:
            details["violations"] = [v.model_dump() for v in report.violations]
        super().__init__(message, details)
        self.report = report


class BadSelector(SquaringError):
    """Raised when a subrectangle orientation does not fit its slot"""

    slug = "bad_selector"


class CodeError(SquaringError):
    """Base exception for Bouwkampcode/tablecode errors"""

    slug = "code_error"


class BouwkampSyntaxError(CodeError):
    """Grammar error in a Bouwkampcode or tablecode record"""

    slug = "syntax_error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}", {"position": position})
        self.position = position


class PlacementError(CodeError):
    """Raised when code elements cannot be placed on the skyline"""

    slug = "placement_error"

    def __init__(self, message: str, element_index: Optional[int] = None):
        details = {} if element_index is None else {"element_index": element_index}
        super().__init__(message, details)
        self.element_index = element_index


class NetworkError(SquaringError):
    """Base exception for electrical network analysis errors"""

    slug = "network_error"


class DisconnectedGraph(NetworkError):
    slug = "disconnected_graph"


class InvalidDatum(NetworkError):
    """Datum node outside the network"""

    slug = "invalid_datum"


class SingularMatrix(NetworkError):
    slug = "singular_matrix"


class ZeroRow(NetworkError):
    """A full-currents row with no nonzero entry"""

    slug = "zero_row"

    def __init__(self, row: int):
        super().__init__(f"Full currents row {row} is zero", {"row": row})
        self.row = row


class GeometryError(NetworkError):
    """Derived placement of a current solution is not a valid tiling"""

    slug = "geometry_error"

    def __init__(self, message: str, polar_branch: int):
        super().__init__(message, {"polar_branch": polar_branch})
        self.polar_branch = polar_branch


class GraphFormatError(SquaringError):
    """Malformed planar_code stream or rotation text"""

    slug = "format_error"

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message, {} if offset is None else {"offset": offset})
        self.offset = offset


class ResourceLimit(SquaringError):
    slug = "resource_limit"


class CatalogError(SquaringError):
    slug = "catalog_error"


class ClassMismatch(CatalogError):
    """Input graph class does not match the requested order"""

    slug = "class_mismatch"


_STATUS_CODES = {
    InvalidTiling: 422,
    BadSelector: 422,
    CodeError: 422,
    GraphFormatError: 422,
    DisconnectedGraph: 422,
    InvalidDatum: 422,
    GeometryError: 409,
    ResourceLimit: 413,
}


def _status_for(exc: SquaringError) -> int:
    for exc_type, status in _STATUS_CODES.items():
        if isinstance(exc, exc_type):
            return status
    return 500


def setup_exception_handlers(app: FastAPI):
    """Setup exception handlers for the FastAPI app"""

    @app.exception_handler(SquaringError)
    async def squaring_error_handler(request: Request, exc: SquaringError):
        status_code = _status_for(exc)
        if status_code >= 500:
            logger.error(f"{type(exc).__name__}: {exc}")
        else:
            logger.warning(f"{type(exc).__name__}: {exc}")
        return JSONResponse(
            status_code=status_code,
            content={
                "error": exc.slug,
                "message": str(exc),
                "details": {"path": str(request.url), **exc.details}
            }
        )

    @app.exception_handler(RequestValidationError)
    async def validation_exception_handler(request: Request, exc: RequestValidationError):
        logger.warning(f"Validation error: {exc}")
        return JSONResponse(
            status_code=422,
            content={
                "error": "validation_error",
                "message": "Request validation failed",
                "details": {
                    "path": str(request.url),
                    "errors": exc.errors()
                }
            }
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_exception_handler(request: Request, exc: StarletteHTTPException):
        logger.warning(f"HTTP exception: {exc.status_code} - {exc.detail}")
        return JSONResponse(
            status_code=exc.status_code,
            content={
                "error": "http_error",
                "message": exc.detail,
                "details": {"path": str(request.url)}
            }
        )

    @app.exception_handler(Exception)
    async def general_exception_handler(request: Request, exc: Exception):
        logger.error(f"Unhandled exception: {exc}", exc_info=True)
        return JSONResponse(
            status_code=500,
            content={
                "error": "internal_server_error",
                "message": "An unexpected error occurred",
                "details": {"path": str(request.url)}
            }
        )
