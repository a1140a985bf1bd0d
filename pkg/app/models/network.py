"""
Electrical network models: branch lists, incidence and Kirchhoff matrices,
current solutions and extraction reports
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from app.core.exact import as_exact
from app.core.exceptions import GraphFormatError
from app.models.dissection import Dissection
from app.models.graph import Dart, PlanarEmbedding

Branch = Tuple[int, int]
"""(tail, head), 0-based nodes."""


@dataclass(frozen=True)
class Network:
    """Nodes ``0..n-1`` joined by oriented unit-resistance branches.

    When built from an embedding, ``darts[k]`` is the edge-end leaving the
    tail of branch ``k`` so currents can be carried onto faces.
    """

    n: int
    branches: Tuple[Branch, ...]
    embedding: Optional[PlanarEmbedding] = None
    darts: Optional[Tuple[Dart, ...]] = None

    @classmethod
    def from_embedding(cls, embedding: PlanarEmbedding) -> "Network":
        """Default branch order: sorted endpoint pairs, lower node to higher."""
        darts = embedding.edges
        branches = tuple((v, embedding.head((v, i))) for v, i in darts)
        return cls(embedding.n, branches, embedding, darts)

    @classmethod
    def from_branches(
        cls, n: int, branches: Sequence[Branch], embedding: Optional[PlanarEmbedding] = None
    ) -> "Network":
        """Explicit column order and orientation, e.g. to match a printed matrix."""
        branches = tuple((int(t), int(h)) for t, h in branches)
        for t, h in branches:
            if not (0 <= t < n and 0 <= h < n) or t == h:
                raise GraphFormatError(f"branch {t + 1}->{h + 1} is not valid for {n} nodes")
        if embedding is None:
            return cls(n, branches)
        if embedding.n != n or embedding.m != len(branches):
            raise GraphFormatError(
                f"{len(branches)} branches on {n} nodes do not match a "
                f"{embedding.n}-vertex {embedding.m}-edge embedding"
            )

        free = list(embedding.edges)
        darts = []
        for t, h in branches:
            lo, hi = min(t, h), max(t, h)
            match = next((d for d in free if d[0] == lo and embedding.head(d) == hi), None)
            if match is None:
                raise GraphFormatError(f"branch {t + 1}->{h + 1} has no edge in the embedding")
            free.remove(match)
            darts.append(match if t == lo else embedding.reverse(match))
        return cls(n, branches, embedding, tuple(darts))

    @property
    def m(self) -> int:
        return len(self.branches)

    def non_datum_nodes(self, datum: int) -> List[int]:
        return [v for v in range(self.n) if v != datum]


class IncidenceMatrix(BaseModel):
    """Node-by-branch matrix: +1 where the branch leaves the node, -1 where it enters"""

    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, ...], ...]
    nodes: Tuple[int, ...] = Field(..., description="Node of each row, 0-based")
    branches: Tuple[Branch, ...]
    datum: Optional[int] = Field(None, description="Removed node, None for the full matrix")

    @property
    def reduced(self) -> bool:
        return self.datum is not None

    @property
    def array(self) -> np.ndarray:
        return as_exact(self.rows) if self.rows else np.zeros((0, len(self.branches)), dtype=object)

    def column(self, k: int) -> Tuple[int, ...]:
        return tuple(row[k] for row in self.rows)


class KirchhoffMatrix(BaseModel):
    """Reduced Laplacian A·Aᵀ of a network"""

    model_config = ConfigDict(frozen=True)

    entries: Tuple[Tuple[int, ...], ...]
    datum: int

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        return as_exact(self.entries) if self.entries else np.zeros((0, 0), dtype=object)


class CurrentSolution(BaseModel):
    """Reduced branch currents with one branch carrying the battery"""

    model_config = ConfigDict(frozen=True)

    polar_branch: int = Field(..., ge=0)
    currents: Tuple[int, ...] = Field(..., description="Reduced current of every branch, tail to head")
    reduction: int = Field(..., ge=1)
    width: int
    height: int
    potentials: Tuple[int, ...] = Field(..., description="Node potentials, datum at 0")

    @property
    def semiperimeter(self) -> int:
        return self.width + self.height

    @property
    def zero_branches(self) -> Tuple[int, ...]:
        return tuple(
            k for k, c in enumerate(self.currents) if c == 0 and k != self.polar_branch
        )

    @property
    def is_square(self) -> bool:
        return self.width == self.height


class ExtractionReport(BaseModel):
    """Dissections read off the current solutions of one network"""

    dissections: List[Tuple[int, Dissection]] = Field(
        default_factory=list, description="(polar branch, dissection), one per distinct class"
    )
    crossed_rows: List[int] = Field(default_factory=list, description="Rows with a zero current")
    equal_potential_rows: List[int] = Field(
        default_factory=list, description="Rows with two equal potentials on one face"
    )
    duplicate_rows: List[int] = Field(default_factory=list)
