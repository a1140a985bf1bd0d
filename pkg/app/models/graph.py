"""
Embedded planar graphs (rotation systems) and graph-class filters
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from app.core.exceptions import GraphFormatError

Dart = Tuple[int, int]
"""An edge-end: (vertex, position in that vertex's rotation)."""

MAX_PAIRINGS = 4096


@dataclass(frozen=True)
class PlanarEmbedding:
    """A connected plane graph as a rotation system.

    ``rotation[v]`` lists the neighbours of ``v`` in clockwise order (0-based).
    ``twin[v][i]`` is the position of the reverse edge-end in the rotation of
    ``rotation[v][i]``; with it parallel edges stay distinguishable.
    """

    rotation: Tuple[Tuple[int, ...], ...]
    twin: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]]) -> "PlanarEmbedding":
        """Pair edge-ends and check the result is a sphere embedding.

        Parallel edges appear in reversed cyclic order around their two ends;
        the cyclic shift of that reversal is chosen so Euler's formula holds.
        """
        rot = tuple(tuple(int(u) for u in nbrs) for nbrs in rotation)
        n = len(rot)
        classes: List[Tuple[int, List[int], List[int]]] = []
        base = [[-1] * len(nbrs) for nbrs in rot]
        for v, nbrs in enumerate(rot):
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphFormatError(f"vertex {v + 1} names neighbour {u + 1} outside 1..{n}")
                if u == v:
                    raise GraphFormatError(f"loop at vertex {v + 1}")
            for u in sorted(set(nbrs)):
                if u < v:
                    continue
                at_v = [i for i, w in enumerate(nbrs) if w == u]
                at_u = [j for j, w in enumerate(rot[u]) if w == v]
                if len(at_v) != len(at_u):
                    raise GraphFormatError(
                        f"vertices {v + 1} and {u + 1} list each other "
                        f"{len(at_v)} and {len(at_u)} times"
                    )
                if len(at_v) == 1:
                    base[v][at_v[0]] = at_u[0]
                    base[u][at_u[0]] = at_v[0]
                else:
                    classes.append((v, at_v, at_u))

        shifts = [range(len(at_v)) for _, at_v, _ in classes]
        tried = 0
        for choice in product(*shifts):
            tried += 1
            if tried > MAX_PAIRINGS:
                break
            twin = [row[:] for row in base]
            for (v, at_v, at_u), shift in zip(classes, choice):
                u = rot[v][at_v[0]]
                k = len(at_v)
                for i, pos in enumerate(at_v):
                    other = at_u[(k - 1 - i + shift) % k]
                    twin[v][pos] = other
                    twin[u][other] = pos
            candidate = cls(rot, tuple(tuple(row) for row in twin))
            if candidate.is_connected() and candidate.euler_characteristic() == 2:
                return candidate
        raise GraphFormatError("rotation system is not a connected sphere embedding")

    @property
    def n(self) -> int:
        return len(self.rotation)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.rotation) // 2

    def head(self, dart: Dart) -> int:
        v, i = dart
        return self.rotation[v][i]

    def reverse(self, dart: Dart) -> Dart:
        v, i = dart
        return (self.rotation[v][i], self.twin[v][i])

    def next_in_face(self, dart: Dart) -> Dart:
        u, j = self.reverse(dart)
        return (u, (j + 1) % len(self.rotation[u]))

    @cached_property
    def faces(self) -> Tuple[Tuple[Dart, ...], ...]:
        """Boundary walks; each dart lies on exactly one face."""
        seen = set()
        faces = []
        for v, nbrs in enumerate(self.rotation):
            for i in range(len(nbrs)):
                if (v, i) in seen:
                    continue
                walk = []
                dart = (v, i)
                while dart not in seen:
                    seen.add(dart)
                    walk.append(dart)
                    dart = self.next_in_face(dart)
                faces.append(tuple(walk))
        return tuple(faces)

    @cached_property
    def face_of(self) -> Dict[Dart, int]:
        return {dart: k for k, face in enumerate(self.faces) for dart in face}

    @property
    def f(self) -> int:
        return len(self.faces)

    @cached_property
    def edges(self) -> Tuple[Dart, ...]:
        """One dart per edge, leaving the lower endpoint, sorted by endpoints then position."""
        darts = [
            (v, i) for v, nbrs in enumerate(self.rotation)
            for i, u in enumerate(nbrs) if v < u
        ]
        return tuple(sorted(darts, key=lambda d: (d[0], self.head(d), d[1])))

    def edge_pairs(self) -> List[Tuple[int, int]]:
        return [(v, self.head((v, i))) for v, i in self.edges]

    def euler_characteristic(self) -> int:
        return self.n - self.m + self.f

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.rotation[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def has_multi_edges(self) -> bool:
        return any(len(set(nbrs)) != len(nbrs) for nbrs in self.rotation)

    def one_based(self) -> List[List[int]]:
        return [[u + 1 for u in nbrs] for nbrs in self.rotation]


class Connectivity(str, Enum):
    EXACTLY_2 = "exactly2"
    AT_LEAST_2 = "atleast2"
    THREE = "3"


class ClassFilter(BaseModel):
    """Graph-class selection for CPSS candidates"""

    min_degree: int = Field(3, ge=1, description="Smallest allowed vertex degree")
    connectivity: Connectivity = Field(Connectivity.EXACTLY_2)
    edge_count: Optional[int] = Field(None, ge=1, description="Required |E|, if any")
    exclude_separated_multi_edges: bool = Field(
        True, description="Drop graphs whose parallel edges do not bound a common digon"
    )
