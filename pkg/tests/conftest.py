"""
Shared fixtures: the order-9 worked c-net, the compound perfect squared
square corpus and small reference graphs
"""

from itertools import combinations
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import pytest

from app.core.bouwkamp import parse_record, place_elements
from app.core.embedding import canonical_embedding_code
from app.core.oracle import brute_generate, remove_edge, triangulations
from app.core.planar_code import parse_rotation_text
from app.models.dissection import Dissection
from app.models.graph import PlanarEmbedding
from app.models.network import Network
from app.utils.file_utils import iter_records

DATA_DIR = Path(__file__).parent / "data"
CORPUS = DATA_DIR / "cpss_appendix.txt"

# c-net of the 33x32 simple perfect squared rectangle, clockwise and 1-based
CNET_ROTATION = "2,3,6;5,4,1;4,6,1;5,6,3,2;6,4,2;1,3,4,5"

# branch order and directions of the printed matrices (0-based nodes)
PRINTED_BRANCHES = [(0, 2), (0, 1), (1, 3), (1, 4), (2, 3), (3, 4), (2, 5), (3, 5), (4, 5), (5, 0)]

PRINTED_A = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, -1, 1, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, -1, 0, -1, 1, 0, 1, 0, 0],
    [0, 0, 0, -1, 0, -1, 0, 0, 1, 0],
]

PRINTED_K = [
    [3, -1, -1, 0, 0],
    [-1, 3, 0, -1, -1],
    [-1, 0, 3, -1, 0],
    [0, -1, -1, 4, -1],
    [0, -1, 0, -1, 3],
]

PRINTED_V = [
    [64, 34, 28, 20, 18],
    [34, 79, 23, 35, 38],
    [28, 23, 61, 25, 16],
    [20, 35, 25, 55, 30],
    [18, 38, 16, 30, 66],
]

PRINTED_F = [
    [69, 25, 16, 9, -28, -7, -33, -5, 2],
    [25, 75, -30, -25, 20, 5, 5, -15, -20],
    [16, -30, 64, 36, 18, -28, -2, -20, 8],
    [9, -25, 36, 69, 2, 33, 7, 5, -28],
    [-28, 20, 18, 2, 66, -16, 36, -30, -14],
    [-7, 5, -28, 33, -16, 61, 9, 25, -36],
    [-33, 5, -2, 7, 36, 9, 61, 25, 16],
    [-5, -15, -20, 5, -30, 25, 25, 55, 30],
    [2, -20, 8, -28, -14, -36, 16, 30, 66],
]

PRINTED_R = (1, 5, 2, 1, 2, 1, 1, 5, 2)
PRINTED_B_DIAGONAL = (69, 15, 32, 69, 33, 61, 61, 11, 33)

RECTANGLE_33X32 = "9 33 32 18 15 7 8 14 4 10 1 9"

WILLCOCKS = "(81,56,38)(18,20)(55,16,3)(1,5,14)(4)(9)(39)(51,30)(29,31,64)(43,8)(35,2)(33)"
WILLCOCKS_TABLECODE = "24 175 175 81 56 38 18 20 55 16 3 1 5 14 4 9 39 51 30 29 31 64 43 8 35 2 33"

TETRAHEDRON_ROTATION = "2,3,4;1,4,3;1,2,4;1,3,2"


def count_spanning_trees(n: int, edges: Sequence[Tuple[int, int]]) -> int:
    """Brute force: every (n-1)-subset of edges that joins all nodes without a cycle."""
    total = 0
    for subset in combinations(edges, n - 1):
        parent = list(range(n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        acyclic = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        total += acyclic
    return total


@pytest.fixture
def cnet() -> PlanarEmbedding:
    """The 6-node, 10-branch c-net of the worked example"""
    return parse_rotation_text(CNET_ROTATION)


@pytest.fixture
def printed_network(cnet) -> Network:
    """The worked c-net with the printed branch order and directions"""
    return Network.from_branches(6, PRINTED_BRANCHES, cnet)


@pytest.fixture
def tetrahedron() -> PlanarEmbedding:
    return parse_rotation_text(TETRAHEDRON_ROTATION)


@pytest.fixture
def willcocks() -> Dissection:
    return place_elements(parse_record(WILLCOCKS))


@pytest.fixture
def rectangle_33x32() -> Dissection:
    return place_elements(parse_record(RECTANGLE_33X32))


@pytest.fixture(scope="session")
def corpus() -> List[Tuple[int, str]]:
    """(line number, record) for every compound perfect squared square of orders 24 to 28"""
    return list(iter_records(CORPUS))


@pytest.fixture(scope="session")
def corpus_by_id(corpus) -> Dict[str, str]:
    """Corpus records keyed by catalog ID, e.g. ``608a``"""
    return {parse_record(text).extended.id: text for _, text in corpus}


@pytest.fixture(scope="session")
def plane_sample() -> List[PlanarEmbedding]:
    """Isomorph-free plane graphs: triangulations up to 7 vertices, each with
    one edge removed, and the class members with at most 12 edges"""
    found: Dict[bytes, PlanarEmbedding] = {}
    for triangulated in triangulations(7).values():
        for t in triangulated:
            found.setdefault(canonical_embedding_code(t), t)
            for dart in t.edges:
                g = remove_edge(t, dart)
                found.setdefault(canonical_embedding_code(g), g)
    for g in brute_generate(12):
        found.setdefault(canonical_embedding_code(g), g)
    return list(found.values())
