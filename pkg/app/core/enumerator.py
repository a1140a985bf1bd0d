"""
Catalog enumeration over planar_code inputs.

Each graph is solved independently in a worker process; results are merged
in input order into a catalog keyed by canonical tablecode, so the output does
not depend on the number of workers.
"""

import logging
import sys
import time
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Deque, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from app.core.catalog import Catalog, entry_for
from app.core.config import settings
from app.core.embedding import filter_class
from app.core.exceptions import ClassMismatch
from app.core.network_solver import NetworkSolver, extract_dissections
from app.core.planar_code import read_planar_code
from app.models.catalog import CatalogEntry, RunStats
from app.models.dissection import Structure
from app.models.graph import ClassFilter, PlanarEmbedding
from app.utils.file_utils import progress_path, read_checkpoint, write_checkpoint

logger = logging.getLogger(__name__)

WorkItem = Tuple[str, int, PlanarEmbedding]


@dataclass
class GraphResult:
    """Outcome of one graph: counters and the canonical entries it produced"""

    source: str
    index: int
    stats: RunStats = field(default_factory=RunStats)
    entries: List[CatalogEntry] = field(default_factory=list)


def solve_graph(
    e: PlanarEmbedding, class_filter: Optional[ClassFilter] = None, datum: str = "last"
) -> Tuple[RunStats, List[CatalogEntry]]:
    """Perfect squared squares produced by one c-net, in canonical form."""
    stats = RunStats()
    if class_filter is not None and not filter_class(e, class_filter):
        stats.graphs_skipped = 1
        return stats, []
    stats.graphs_processed = 1

    solver = NetworkSolver(e, datum=0 if datum == "first" else None)
    squares = []
    for solution in solver.solutions():
        if solution.zero_branches:
            stats.crossed_rows += 1
            continue
        stats.rows_solved += 1
        if solver.is_square(solution.polar_branch):
            squares.append(solution)
    stats.crossed_rows += len(solver.reduction.zero_rows)

    entries = []
    for _, d in extract_dissections(solver.network, squares).dissections:
        stats.squares_found += 1
        if len(set(d.sizes)) != d.order:
            continue
        entry = entry_for(d)
        stats.perfect_squares += 1
        if entry.classification.structure == Structure.COMPOUND:
            stats.compound_perfect += 1
        entries.append(entry)
    return stats, entries


def _solve_chunk(
    items: Sequence[WorkItem], class_filter: Optional[ClassFilter], datum: str
) -> List[GraphResult]:
    results = []
    for source, index, e in items:
        stats, entries = solve_graph(e, class_filter, datum)
        results.append(GraphResult(source, index, stats, entries))
    return results


def _chunks(items: Iterable[WorkItem], size: int) -> Iterator[List[WorkItem]]:
    items = iter(items)
    while True:
        chunk = list(islice(items, size))
        if not chunk:
            return
        yield chunk


class Enumerator:
    """Drives solving over input files with checkpoints and an ordered merge"""

    def __init__(
        self,
        output: Path,
        order: Optional[int] = None,
        class_filter: Optional[ClassFilter] = None,
        jobs: int = 1,
        chunk_size: Optional[int] = None,
        checkpoint_every: Optional[int] = None,
        check_order: bool = True,
        datum: str = "last",
        resume: bool = False,
        progress: bool = True,
    ):
        self.output = Path(output)
        self.order = order
        self.class_filter = class_filter
        self.jobs = max(1, jobs)
        self.chunk_size = chunk_size or settings.CHUNK_SIZE
        self.checkpoint_every = checkpoint_every or settings.CHECKPOINT_EVERY
        self.check_order = check_order
        self.datum = datum
        self.progress = progress and sys.stderr.isatty()
        self.catalog = Catalog()
        self.done: Dict[str, int] = {}
        self.stats = RunStats()
        if resume:
            self._load_resume_state()

    def _load_resume_state(self) -> None:
        self.done = read_checkpoint(self.output)
        if self.output.exists():
            self.catalog = Catalog.read(self.output)

    def _work_items(self, paths: Sequence[Path]) -> Iterator[WorkItem]:
        for path in paths:
            name = str(path)
            skip = self.done.get(name, 0)
            logger.info(f"Reading {name}" + (f", skipping {skip} graphs" if skip else ""))
            for index, e in enumerate(read_planar_code(path)):
                if index < skip:
                    continue
                if self.check_order and self.order is not None and e.m != self.order + 1:
                    raise ClassMismatch(
                        f"{name} graph {index + 1} has {e.m} edges; order {self.order} "
                        f"needs {self.order + 1}"
                    )
                yield name, index, e

    def _merge(self, result: GraphResult) -> None:
        self.stats.add(result.stats)
        for entry in result.entries:
            self.catalog.add(entry)
        self.done[result.source] = result.index + 1

    def checkpoint(self) -> None:
        self.catalog.assign_ids()
        self.catalog.write(self.output)
        write_checkpoint(self.output, self.done)

    def run(self, paths: Sequence[Path]) -> RunStats:
        started = time.perf_counter()
        chunks = _chunks(self._work_items(paths), self.chunk_size)
        since_checkpoint = 0
        bar = tqdm(desc="graphs", unit="graph", disable=not self.progress, file=sys.stderr)

        def consume(results: List[GraphResult]) -> None:
            nonlocal since_checkpoint
            for result in results:
                self._merge(result)
                bar.update(1)
                since_checkpoint += 1
                if since_checkpoint >= self.checkpoint_every:
                    self.checkpoint()
                    since_checkpoint = 0

        try:
            if self.jobs == 1:
                for chunk in chunks:
                    consume(_solve_chunk(chunk, self.class_filter, self.datum))
            else:
                with ProcessPoolExecutor(max_workers=self.jobs) as executor:
                    pending: Deque[Future] = deque()
                    for chunk in chunks:
                        pending.append(
                            executor.submit(_solve_chunk, chunk, self.class_filter, self.datum)
                        )
                        if len(pending) >= 2 * self.jobs:
                            consume(pending.popleft().result())
                    while pending:
                        consume(pending.popleft().result())
        finally:
            bar.close()

        self.checkpoint()
        self.stats.distinct_after_dedup = len(self.catalog)
        self.stats.elapsed = time.perf_counter() - started
        logger.info(
            f"Enumeration finished: {self.stats.graphs_processed} graphs, "
            f"{len(self.catalog)} catalog entries, progress in {progress_path(self.output)}"
        )
        return self.stats
