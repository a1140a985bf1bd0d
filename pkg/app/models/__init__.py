# Pydantic models shared by the core, the CLI and the API
from .dissection import (
    Element, Dissection, Symmetry, Classification, SubrectangleRegion,
    ValidationReport, Violation, ViolationKind, Perfection, Structure, Shape,
)
from .code import BouwkampCode, ExtendedFields, TablecodeLine, CanonicalForm
from .graph import Dart, PlanarEmbedding, Connectivity, ClassFilter
from .network import (
    Branch, Network, IncidenceMatrix, KirchhoffMatrix, CurrentSolution, ExtractionReport,
)
from .catalog import CatalogEntry, RunStats, OrderStats
