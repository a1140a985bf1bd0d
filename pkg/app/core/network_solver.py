"""
Exact electrical analysis of embedded planar graphs.

Every branch is a unit resistor. Putting the battery in branch ``i`` and
reading the remaining currents gives a squared rectangle: branch currents
are element sizes, node potentials are vertical dividing lines and face
potentials are horizontal ones.
"""

import logging
from collections import deque
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from app.core.dissection import validate_tiling
from app.core.exact import adjugate, as_exact, bareiss_determinant, exact_matmul, row_gcds, to_rows
from app.core.exceptions import (
    DisconnectedGraph,
    GeometryError,
    InvalidDatum,
    NetworkError,
    ZeroRow,
)
from app.core.isomers import canonicalize
from app.models.dissection import Box, Dissection
from app.models.graph import PlanarEmbedding
from app.models.network import (
    CurrentSolution,
    ExtractionReport,
    IncidenceMatrix,
    KirchhoffMatrix,
    Network,
)

logger = logging.getLogger(__name__)

NetworkLike = Union[Network, PlanarEmbedding]


class Reduction(NamedTuple):
    R: Tuple[int, ...]
    B: np.ndarray
    zero_rows: Tuple[int, ...]


def _as_network(source: NetworkLike) -> Network:
    if isinstance(source, PlanarEmbedding):
        return Network.from_embedding(source)
    return source


def _require_connected(network: Network) -> None:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(network.n))
    graph.add_edges_from(network.branches)
    if network.n == 0 or not nx.is_connected(graph):
        raise DisconnectedGraph(
            f"network with {network.n} nodes and {network.m} branches is not connected"
        )


def incidence(source: NetworkLike, datum: Optional[int] = None, full: bool = False) -> IncidenceMatrix:
    """Reduced incidence matrix with the ``datum`` row removed (last node by default)."""
    network = _as_network(source)
    _require_connected(network)
    if datum is None:
        datum = network.n - 1
    if not full and not 0 <= datum < network.n:
        raise InvalidDatum(
            f"datum node {datum + 1} is not one of nodes 1..{network.n}",
            {"datum": datum + 1, "nodes": network.n},
        )
    nodes = tuple(range(network.n)) if full else tuple(network.non_datum_nodes(datum))
    row_of = {v: r for r, v in enumerate(nodes)}
    rows = [[0] * network.m for _ in nodes]
    for k, (tail, head) in enumerate(network.branches):
        if tail in row_of:
            rows[row_of[tail]][k] = 1
        if head in row_of:
            rows[row_of[head]][k] = -1
    return IncidenceMatrix(
        rows=tuple(tuple(r) for r in rows),
        nodes=nodes,
        branches=network.branches,
        datum=None if full else datum,
    )


def kirchhoff(a: IncidenceMatrix) -> KirchhoffMatrix:
    """K = A·Aᵀ."""
    arr = a.array
    return KirchhoffMatrix(entries=to_rows(exact_matmul(arr, arr.T)), datum=a.datum)


def complexity(k: Union[KirchhoffMatrix, Sequence[Sequence[int]]]) -> int:
    """Number of spanning trees, det K."""
    entries = k.entries if isinstance(k, KirchhoffMatrix) else k
    return bareiss_determinant(entries)


def voltage_matrix(k: Union[KirchhoffMatrix, Sequence[Sequence[int]]]) -> np.ndarray:
    """V = det(K)·K⁻¹ as an integer adjugate."""
    entries = k.entries if isinstance(k, KirchhoffMatrix) else k
    _, adj = adjugate(entries)
    return adj


def full_currents(a: Union[IncidenceMatrix, np.ndarray], v: np.ndarray) -> np.ndarray:
    """F = Aᵀ·V·A; row ``i`` holds the currents with the battery in branch ``i``."""
    arr = a.array if isinstance(a, IncidenceMatrix) else as_exact(a)
    return exact_matmul(exact_matmul(arr.T, v), arr)


def reduce(f: np.ndarray, strict: bool = False) -> Reduction:
    """Divide each row of F by its gcd.

    A zero row keeps ``R_i = 1``; it is listed in ``zero_rows`` or, with
    ``strict``, raises :class:`ZeroRow`.
    """
    gcds = row_gcds(f)
    zero_rows = tuple(i for i, g in enumerate(gcds) if g == 0)
    if zero_rows:
        if strict:
            raise ZeroRow(zero_rows[0])
        logger.warning(f"full currents rows {list(zero_rows)} are zero")
    r = tuple(g if g else 1 for g in gcds)
    b = np.empty(f.shape, dtype=object)
    for i, divisor in enumerate(r):
        b[i, :] = [int(x) // divisor for x in f[i]]
    return Reduction(r, b, zero_rows)


def detect_square(b: np.ndarray, r: Sequence[int], det_k: int, i: int) -> bool:
    return 2 * int(r[i]) * int(b[i][i]) == det_k


class NetworkSolver:
    """Matrices of one network, computed once and shared by every polar branch."""

    def __init__(self, source: NetworkLike, datum: Optional[int] = None):
        self.network = _as_network(source)
        self.datum = self.network.n - 1 if datum is None else datum

    @cached_property
    def incidence(self) -> IncidenceMatrix:
        return incidence(self.network, self.datum)

    @cached_property
    def kirchhoff(self) -> KirchhoffMatrix:
        return kirchhoff(self.incidence)

    @cached_property
    def det(self) -> int:
        return complexity(self.kirchhoff)

    @cached_property
    def voltages(self) -> np.ndarray:
        return voltage_matrix(self.kirchhoff)

    @cached_property
    def currents(self) -> np.ndarray:
        return full_currents(self.incidence, self.voltages)

    @cached_property
    def reduction(self) -> Reduction:
        reduction = reduce(self.currents)
        logger.debug(
            f"network n={self.network.n} m={self.network.m}: det={self.det} R={list(reduction.R)}"
        )
        return reduction

    def potentials(self, i: int) -> Tuple[int, ...]:
        """Node potentials for polar branch ``i``, scaled like the reduced currents."""
        r_i = self.reduction.R[i]
        column = self.incidence.array[:, i]
        raw = exact_matmul(self.voltages, column)
        values = [0] * self.network.n
        for node, value in zip(self.incidence.nodes, raw):
            assert int(value) % r_i == 0, "node potentials must be integral after reduction"
            values[node] = int(value) // r_i
        return tuple(values)

    def solution(self, i: int) -> CurrentSolution:
        r, b, _ = self.reduction
        width = int(b[i][i])
        return CurrentSolution(
            polar_branch=i,
            currents=tuple(int(c) for c in b[i]),
            reduction=r[i],
            width=width,
            height=self.det // r[i] - width,
            potentials=self.potentials(i),
        )

    def solutions(self) -> Iterator[CurrentSolution]:
        for i in range(self.network.m):
            if i in self.reduction.zero_rows:
                continue
            yield self.solution(i)

    def is_square(self, i: int) -> bool:
        r, b, _ = self.reduction
        return detect_square(b, r, self.det, i)

    def extract(self) -> ExtractionReport:
        return extract_dissections(self.network, self.solutions())


def _face_heights(network: Network, solution: CurrentSolution) -> Dict[int, int]:
    """Dual potentials: crossing a branch from one face to the next adds its current."""
    embedding = network.embedding
    crossing: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for k, dart in enumerate(network.darts):
        crossing[dart] = (k, 1)
        crossing[embedding.reverse(dart)] = (k, -1)

    polar = solution.polar_branch
    start = embedding.face_of[network.darts[polar]]
    heights = {start: 0}
    queue = deque([start])
    while queue:
        face = queue.popleft()
        for dart in embedding.faces[face]:
            k, sign = crossing[dart]
            if k == polar:
                continue
            other = embedding.face_of[embedding.reverse(dart)]
            value = heights[face] + sign * solution.currents[k]
            if other not in heights:
                heights[other] = value
                queue.append(other)
            elif heights[other] != value:
                raise GeometryError(
                    f"face potentials disagree across branch {k} for polar branch {polar}", polar
                )
    return heights


def _has_equal_potentials(embedding: PlanarEmbedding, potentials: Sequence[int]) -> bool:
    for face in embedding.faces:
        vertices = {v for v, _ in face}
        values = [potentials[v] for v in vertices]
        if len(set(values)) != len(values):
            return True
    return False


def place_solution(network: Network, solution: CurrentSolution) -> Dissection:
    """Lay out the squares of one current solution and check the tiling."""
    polar = solution.polar_branch
    tail, _ = network.branches[polar]
    top = solution.potentials[tail]
    heights = _face_heights(network, solution)
    embedding = network.embedding

    boxes: List[Box] = []
    for k, dart in enumerate(network.darts):
        if k == polar:
            continue
        u, v = network.branches[k]
        size = abs(solution.currents[k])
        x = top - max(solution.potentials[u], solution.potentials[v])
        y = min(
            heights[embedding.face_of[dart]],
            heights[embedding.face_of[embedding.reverse(dart)]],
        )
        boxes.append((x, y, size))

    x0 = min(b[0] for b in boxes)
    y0 = min(b[1] for b in boxes)
    boxes = [(x - x0, y - y0, s) for x, y, s in boxes]
    width = max(x + s for x, _, s in boxes)
    height = max(y + s for _, y, s in boxes)
    if (width, height) != (solution.width, solution.height):
        raise GeometryError(
            f"polar branch {polar}: placed {width}x{height}, expected "
            f"{solution.width}x{solution.height}",
            polar,
        )
    d = Dissection.from_boxes(width, height, boxes)
    report = validate_tiling(d)
    if not report.ok:
        raise GeometryError(
            f"polar branch {polar}: placement is not a tiling ({', '.join(k.value for k in report.kinds())})", polar
        )
    return d


def extract_dissections(source: NetworkLike, solutions: Iterable[CurrentSolution]) -> ExtractionReport:
    """One dissection per polar branch whose non-polar currents are all nonzero.

    Rows that produce a rectangle already found for this network are
    listed in ``duplicate_rows`` instead.
    """
    network = _as_network(source)
    if network.embedding is None or network.darts is None:
        raise NetworkError("dissection extraction needs an embedded network")
    report = ExtractionReport()
    seen = set()
    for solution in solutions:
        i = solution.polar_branch
        if solution.zero_branches or network.m < 3:
            report.crossed_rows.append(i)
            logger.debug(f"row {i}: zero current in branches {list(solution.zero_branches)}")
            continue
        if _has_equal_potentials(network.embedding, solution.potentials):
            report.equal_potential_rows.append(i)
        d = place_solution(network, solution)
        key = canonicalize(d).tablecode.text()
        if key in seen:
            report.duplicate_rows.append(i)
            continue
        seen.add(key)
        report.dissections.append((i, d))
    return report
