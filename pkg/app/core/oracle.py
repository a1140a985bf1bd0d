"""
Brute-force generator for small graph classes.

Triangulations are grown from the tetrahedron by vertex splitting; general
plane graphs follow by deleting one edge at a time. Both steps reject
isomorphs by canonical embedding code. Only desk-scale edge counts are
accepted; large runs belong to plantri.
"""

import logging
from collections import Counter
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from app.core.config import settings
from app.core.embedding import canonical_embedding_code, filter_class, to_networkx
from app.core.exceptions import ResourceLimit
from app.models.graph import ClassFilter, Connectivity, Dart, PlanarEmbedding

logger = logging.getLogger(__name__)

TETRAHEDRON = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))

CPSS_CLASS = ClassFilter(
    min_degree=3, connectivity=Connectivity.EXACTLY_2, exclude_separated_multi_edges=False
)


def split_vertex(t: PlanarEmbedding, v: int, p: int, q: int) -> PlanarEmbedding:
    """Split ``v`` so a new vertex takes the neighbours from position ``p`` to ``q``.

    The end neighbours ``rotation[v][p]`` and ``rotation[v][q]`` stay adjacent
    to both halves, so a triangulation stays a triangulation.
    """
    around = t.rotation[v]
    d = len(around)
    w = t.n
    arc = [around[(p + k) % d] for k in range((q - p) % d + 1)]
    rest = [around[(q + k) % d] for k in range((p - q) % d + 1)]
    rotation = [list(nbrs) for nbrs in t.rotation]
    rotation[v] = rest + [w]
    rotation.append(arc + [v])

    first, last = arc[0], arc[-1]
    for x in arc[1:-1]:
        rotation[x] = [w if y == v else y for y in rotation[x]]
    at = rotation[first].index(v)
    rotation[first].insert(at, w)
    at = rotation[last].index(v)
    rotation[last].insert(at + 1, w)
    return PlanarEmbedding.from_rotation(rotation)


def remove_edge(e: PlanarEmbedding, dart: Dart) -> PlanarEmbedding:
    drop = {dart, e.reverse(dart)}
    new_index: Dict[Dart, int] = {}
    kept: List[List[int]] = []
    for v in range(e.n):
        positions = [i for i in range(e.degree(v)) if (v, i) not in drop]
        for new, i in enumerate(positions):
            new_index[(v, i)] = new
        kept.append(positions)
    rotation = tuple(tuple(e.rotation[v][i] for i in kept[v]) for v in range(e.n))
    twin = tuple(
        tuple(new_index[e.reverse((v, i))] for i in kept[v]) for v in range(e.n)
    )
    return PlanarEmbedding(rotation, twin)


def triangulations(n_max: int) -> Dict[int, List[PlanarEmbedding]]:
    """Isomorph-free triangulations with 4..n_max vertices."""
    start = PlanarEmbedding.from_rotation(TETRAHEDRON)
    level = {canonical_embedding_code(start): start}
    found = {4: [start]}
    for n in range(5, n_max + 1):
        grown: Dict[bytes, PlanarEmbedding] = {}
        for t in level.values():
            for v in range(t.n):
                d = t.degree(v)
                for p in range(d):
                    for q in range(d):
                        if p == q:
                            continue
                        s = split_vertex(t, v, p, q)
                        grown.setdefault(canonical_embedding_code(s), s)
        found[n] = list(grown.values())
        level = grown
        logger.debug(f"{len(found[n])} triangulations with {n} vertices")
    return found


def _survives(e: PlanarEmbedding) -> bool:
    """Whether deleting more edges could still reach a candidate."""
    if min(e.degree(v) for v in range(e.n)) < 3:
        return False
    return nx.is_biconnected(nx.Graph(to_networkx(e)))


def brute_generate(max_edges: int, n_vertices: Optional[int] = None) -> Iterator[PlanarEmbedding]:
    """Exactly 2-connected plane graphs with min degree 3, |V| <= |F| and |E| <= ``max_edges``.

    One embedding per isomorphism class, reflections included. ``n_vertices``
    restricts the run to one row of the class table.
    """
    if max_edges > settings.ORACLE_MAX_EDGES:
        raise ResourceLimit(
            f"brute_generate is limited to {settings.ORACLE_MAX_EDGES} edges, got {max_edges}"
        )
    # |E| = |V| + |F| - 2 >= 2|V| - 2
    n_max = (max_edges + 2) // 2
    if n_vertices is not None:
        n_max = min(n_max, n_vertices)
    if n_max < 4:
        return
    rows = range(n_vertices, n_vertices + 1) if n_vertices is not None else range(4, n_max + 1)
    tri = triangulations(n_max)

    for n in rows:
        if n not in tri:
            continue
        level = {canonical_embedding_code(t): t for t in tri[n]}
        total = 0
        while level:
            reduced: Dict[bytes, PlanarEmbedding] = {}
            for g in level.values():
                if g.m <= max_edges and g.n <= g.f and filter_class(g, CPSS_CLASS):
                    total += 1
                    yield g
                if g.f - 1 < g.n:
                    continue
                for dart in g.edges:
                    h = remove_edge(g, dart)
                    if _survives(h):
                        reduced.setdefault(canonical_embedding_code(h), h)
            level = reduced
        logger.info(f"{total} class members with {n} vertices")


def class_counts(embeddings: Iterable[PlanarEmbedding]) -> Dict[Tuple[int, int], int]:
    """Graph-class table: ``{(|V|, |F|): count}``."""
    return dict(sorted(Counter((e.n, e.f) for e in embeddings).items()))
