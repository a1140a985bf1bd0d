"""
Routes served under /api/v1
"""

from fastapi import APIRouter

from app.api.v1 import dissections, networks

api_router = APIRouter()
api_router.include_router(dissections.router)
api_router.include_router(networks.router)
