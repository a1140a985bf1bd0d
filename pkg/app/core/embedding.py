"""
Operations on rotation systems: duals, canonical codes and graph-class filters
"""

import logging
from collections import Counter, defaultdict
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from app.core.dissection import require_tiling
from app.models.dissection import Dissection
from app.models.graph import ClassFilter, Connectivity, Dart, PlanarEmbedding

logger = logging.getLogger(__name__)


def dual(e: PlanarEmbedding) -> PlanarEmbedding:
    """Face-vertex dual; each face's walk order becomes its rotation."""
    faces = e.faces
    position: Dict[Dart, Tuple[int, int]] = {}
    for k, face in enumerate(faces):
        for p, dart in enumerate(face):
            position[dart] = (k, p)

    rotation = []
    twin = []
    for face in faces:
        rotation.append(tuple(e.face_of[e.reverse(d)] for d in face))
        twin.append(tuple(position[e.reverse(d)][1] for d in face))
    return PlanarEmbedding(tuple(rotation), tuple(twin))


def _code_from(e: PlanarEmbedding, start: Dart, step: int) -> Tuple[int, ...]:
    """BFS labelling from ``start``, walking rotations in direction ``step``.

    Each edge-end contributes the head's label and the offset of its twin from
    the head's reference edge-end; vertex lists end in 0.
    """
    label = {start[0]: 1}
    reference = {start[0]: start[1]}
    order = [start[0]]
    code: List[int] = []
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        deg = e.degree(v)
        for t in range(deg):
            i = (reference[v] + step * t) % deg
            u, j = e.reverse((v, i))
            if u not in label:
                label[u] = len(order) + 1
                reference[u] = j
                order.append(u)
            offset = (step * (j - reference[u])) % e.degree(u)
            code.extend((label[u], offset))
        code.append(0)
    return tuple(code)


def canonical_embedding_code(e: PlanarEmbedding) -> bytes:
    """Minimal BFS code over eligible start edge-ends and both orientations.

    Reflections count as isomorphisms. Start edge-ends are restricted to those
    with the largest (tail degree, head degree), an isomorphism invariant.
    """
    darts = [(v, i) for v in range(e.n) for i in range(e.degree(v))]
    key = {d: (e.degree(d[0]), e.degree(e.head(d))) for d in darts}
    top = max(key.values())
    best: Optional[Tuple[int, ...]] = None
    for dart in darts:
        if key[dart] != top:
            continue
        for step in (1, -1):
            code = _code_from(e, dart, step)
            if best is None or code < best:
                best = code
    values = np.array((e.n, e.m) + best, dtype=">u2")
    return values.tobytes()


def to_networkx(e: PlanarEmbedding) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(e.n))
    graph.add_edges_from(e.edge_pairs())
    return graph


def has_two_separation(e: PlanarEmbedding) -> bool:
    """True if removing two vertices disconnects the graph, or parallel edges split off."""
    if e.n >= 3 and e.has_multi_edges():
        return True
    simple = nx.Graph(to_networkx(e))
    if e.n < 4 or simple.number_of_edges() == e.n * (e.n - 1) // 2:
        return False
    return nx.node_connectivity(simple) <= 2


def separated_multi_edges(e: PlanarEmbedding) -> List[Tuple[int, int]]:
    """Vertex pairs whose parallel edges are not all bundled by digon faces."""
    multiplicity = Counter(tuple(sorted(pair)) for pair in e.edge_pairs())
    digons = Counter(
        tuple(sorted({v for v, _ in face})) for face in e.faces if len(face) == 2
    )
    return sorted(
        pair for pair, k in multiplicity.items() if k > 1 and digons.get(pair, 0) < k - 1
    )


def filter_class(e: PlanarEmbedding, filt: ClassFilter) -> bool:
    if filt.edge_count is not None and e.m != filt.edge_count:
        return False
    if min(e.degree(v) for v in range(e.n)) < filt.min_degree:
        return False
    simple = nx.Graph(to_networkx(e))
    if e.n < 2 or not nx.is_biconnected(simple):
        return False
    if filt.exclude_separated_multi_edges and separated_multi_edges(e):
        return False
    if filt.connectivity == Connectivity.EXACTLY_2:
        return has_two_separation(e)
    if filt.connectivity == Connectivity.THREE:
        return not has_two_separation(e)
    return True


def class_cell(e: PlanarEmbedding) -> Tuple[int, int]:
    """(|V|, |F|) cell of the graph-class table."""
    return (e.n, e.f)


def cnet_of(d: Dissection) -> PlanarEmbedding:
    """The c-net a tiling comes from.

    Vertices are the maximal vertical segments of ``d``, left to right and top
    to bottom. Each element is an edge from the segment on its left to the one
    on its right, and the pole edge joins the two sides of the rectangle.
    Solving the result with the pole edge as polar branch gives ``d`` back, up
    to symmetry.
    """
    require_tiling(d)
    spans: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for x, y, s in d.boxes:
        spans[x].append((y, y + s))
        spans[x + s].append((y, y + s))

    segments: List[Tuple[int, int, int]] = []
    for x in sorted(spans):
        start, end = None, None
        for y0, y1 in sorted(spans[x]):
            if start is not None and y0 <= end:
                end = max(end, y1)
                continue
            if start is not None:
                segments.append((x, start, end))
            start, end = y0, y1
        segments.append((x, start, end))

    def segment_at(x: int, y0: int, y1: int) -> int:
        return next(
            k for k, (sx, top, bottom) in enumerate(segments)
            if sx == x and top <= y0 and y1 <= bottom
        )

    # clockwise from the top: elements to the right downwards, then to the left upwards
    ends: List[List[Tuple[Tuple[int, int], int]]] = [[] for _ in segments]
    for x, y, s in d.boxes:
        left, right = segment_at(x, y, y + s), segment_at(x + s, y, y + s)
        ends[left].append(((0, y), right))
        ends[right].append(((1, -y), left))
    west, east = segment_at(0, 0, d.height), segment_at(d.width, 0, d.height)
    ends[west].append(((-1, 0), east))
    ends[east].append(((2, 0), west))

    rotation = [[u for _, u in sorted(around)] for around in ends]
    logger.debug(f"c-net of {d.width}x{d.height} order {d.order}: {len(segments)} vertices")
    return PlanarEmbedding.from_rotation(rotation)
