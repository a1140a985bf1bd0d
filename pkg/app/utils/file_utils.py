"""
File handling utilities: record files, atomic writes and checkpoints
"""

import logging
from pathlib import Path
from typing import Dict, Iterator, Tuple, Union

from app.core.exceptions import CatalogError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def iter_records(path: PathLike) -> Iterator[Tuple[int, str]]:
    """Yield ``(line number, text)`` for each record; blank and ``#`` lines are skipped."""
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            yield number, text


def atomic_write_text(path: PathLike, text: str) -> None:
    """Write to a temporary sibling first, then rename over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_file = path.with_name(path.name + ".tmp")
    with open(temp_file, "w", encoding="utf-8") as f:
        f.write(text)
    temp_file.replace(path)


def progress_path(output: PathLike) -> Path:
    output = Path(output)
    return output.with_name(output.name + ".progress")


def read_checkpoint(output: PathLike) -> Dict[str, int]:
    """Graphs already processed per input file, as recorded next to ``output``."""
    path = progress_path(output)
    if not path.exists():
        return {}
    done: Dict[str, int] = {}
    for number, text in iter_records(path):
        name, sep, count = text.rpartition("\t")
        if not sep or not count.isdigit():
            raise CatalogError(f"{path}:{number}: expected '<input-path>\\t<graph-index>'")
        done[name] = int(count)
    logger.info(f"Resuming from {path}: {sum(done.values())} graphs already processed")
    return done


def write_checkpoint(output: PathLike, done: Dict[str, int]) -> None:
    lines = [f"{name}\t{count}" for name, count in done.items()]
    atomic_write_text(progress_path(output), "\n".join(lines) + ("\n" if lines else ""))
