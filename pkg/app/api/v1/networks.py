"""
Network endpoints: solve a single embedded c-net
"""

import logging

from fastapi import APIRouter

from app.core.dissection import classify
from app.core.isomers import canonicalize
from app.core.network_solver import NetworkSolver
from app.models.api import RectangleItem, SolutionItem, SolveRequest, SolveResponse
from app.models.graph import PlanarEmbedding

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/networks", tags=["Networks"])


@router.post("/solve", response_model=SolveResponse)
async def solve(request: SolveRequest):
    """Currents for every polar branch and the distinct rectangles they produce"""
    embedding = PlanarEmbedding.from_rotation([[u - 1 for u in nbrs] for nbrs in request.rotation])
    datum = None if request.datum is None else request.datum - 1
    solver = NetworkSolver(embedding, datum=datum)
    branches = solver.network.branches

    solutions = [
        SolutionItem(
            branch=s.polar_branch + 1,
            tail=branches[s.polar_branch][0] + 1,
            head=branches[s.polar_branch][1] + 1,
            width=s.width,
            height=s.height,
            reduction=s.reduction,
            currents=list(s.currents),
            is_square=s.is_square,
        )
        for s in solver.solutions()
    ]
    report = solver.extract()
    rectangles = [
        RectangleItem(
            branch=row + 1,
            tablecode=canonicalize(d).tablecode.text(),
            flags=classify(d).flags,
        )
        for row, d in report.dissections
    ]
    logger.info(
        f"Solved c-net with {embedding.n} nodes and {embedding.m} branches: "
        f"{len(rectangles)} rectangles"
    )
    return SolveResponse(
        nodes=embedding.n,
        branches=embedding.m,
        complexity=solver.det,
        solutions=solutions,
        rectangles=rectangles,
        crossed_rows=[i + 1 for i in report.crossed_rows],
        equal_potential_rows=[i + 1 for i in report.equal_potential_rows],
    )
