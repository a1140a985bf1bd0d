"""
plantri planar_code streams and textual rotation systems
"""

import logging
import re
from io import BytesIO
from pathlib import Path
from typing import BinaryIO, Iterable, Iterator, List, Union

from app.core.exceptions import GraphFormatError
from app.models.graph import PlanarEmbedding

logger = logging.getLogger(__name__)

HEADER = b">>planar_code<<"
MAX_VERTICES = 254


def _read_exact(stream: BinaryIO, size: int, offset: int) -> bytes:
    data = stream.read(size)
    if len(data) != size:
        raise GraphFormatError("truncated record", offset + len(data))
    return data


def read_planar_code(stream: Union[BinaryIO, bytes, str, Path]) -> Iterator[PlanarEmbedding]:
    """Lazily decode embeddings; vertex lists are 1-based and 0-terminated."""
    if isinstance(stream, (str, Path)):
        with open(stream, "rb") as handle:
            yield from read_planar_code(handle)
        return
    if isinstance(stream, bytes):
        stream = BytesIO(stream)

    offset = 0
    first = stream.read(1)
    if first == b">":
        rest = _read_exact(stream, len(HEADER) - 1, 1)
        if first + rest != HEADER:
            raise GraphFormatError(f"bad header {first + rest!r}", 0)
        offset = len(HEADER)
        first = stream.read(1)

    count = 0
    while first:
        n = first[0]
        record_at = offset
        offset += 1
        if n == 0 or n > MAX_VERTICES:
            raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}", record_at)
        rotation: List[List[int]] = []
        for v in range(n):
            neighbours: List[int] = []
            while True:
                byte = _read_exact(stream, 1, offset)[0]
                offset += 1
                if byte == 0:
                    break
                if byte > n:
                    raise GraphFormatError(
                        f"vertex {v + 1} names neighbour {byte} of an {n}-vertex graph", offset - 1
                    )
                neighbours.append(byte - 1)
            rotation.append(neighbours)
        try:
            embedding = PlanarEmbedding.from_rotation(rotation)
        except GraphFormatError as e:
            raise GraphFormatError(f"graph {count + 1}: {e.message}", record_at) from e
        count += 1
        yield embedding
        first = stream.read(1)
    logger.debug(f"read {count} embeddings ({offset} bytes)")


def write_planar_code(embeddings: Iterable[PlanarEmbedding], header: bool = True) -> bytes:
    out = bytearray(HEADER if header else b"")
    for e in embeddings:
        if e.n > MAX_VERTICES:
            raise GraphFormatError(f"{e.n} vertices do not fit one byte")
        out.append(e.n)
        for neighbours in e.rotation:
            out.extend(u + 1 for u in neighbours)
            out.append(0)
    return bytes(out)


def parse_rotation_text(text: str) -> PlanarEmbedding:
    """Parse ``"2,3,6;5,4,1;..."``: clockwise 1-based neighbours, one vertex per ``;``."""
    parts = text.strip().split(";")
    if parts and parts[-1].strip() == "":
        parts.pop()
    n = len(parts)
    rotation = []
    offset = 0
    for part in parts:
        neighbours = []
        for match in re.finditer(r"[^,\s]+", part):
            token = match.group(0)
            if not token.isdigit() or not 1 <= int(token) <= n:
                raise GraphFormatError(f"bad neighbour {token!r}", offset + match.start())
            neighbours.append(int(token) - 1)
        if not neighbours:
            raise GraphFormatError("vertex without neighbours", offset)
        rotation.append(neighbours)
        offset += len(part) + 1
    if n == 0:
        raise GraphFormatError("empty rotation system", 0)
    return PlanarEmbedding.from_rotation(rotation)


def format_rotation_text(e: PlanarEmbedding) -> str:
    return ";".join(",".join(str(u) for u in nbrs) for nbrs in e.one_based())
