"""
Tests for planar_code streams and rotation text
"""

from io import BytesIO

import pytest

from app.core.embedding import canonical_embedding_code
from app.core.exceptions import GraphFormatError
from app.core.planar_code import (
    HEADER,
    format_rotation_text,
    parse_rotation_text,
    read_planar_code,
    write_planar_code,
)
from tests.conftest import CNET_ROTATION, TETRAHEDRON_ROTATION

K4_RECORD = bytes([4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0])
DOUBLE_EDGE_RECORD = bytes([2, 2, 2, 0, 1, 1, 0])


def test_read_k4_with_header():
    [e] = list(read_planar_code(HEADER + K4_RECORD))
    assert (e.n, e.m, e.f) == (4, 6, 4)
    assert e.rotation[0] == (1, 2, 3)


def test_header_is_optional():
    assert len(list(read_planar_code(K4_RECORD + K4_RECORD))) == 2


def test_header_only_stream_is_empty():
    assert list(read_planar_code(HEADER)) == []
    assert list(read_planar_code(b"")) == []


def test_read_double_edge():
    [e] = list(read_planar_code(BytesIO(DOUBLE_EDGE_RECORD)))
    assert (e.n, e.m, e.f) == (2, 2, 2)


def test_write_then_read_file(tmp_path, cnet, tetrahedron):
    path = tmp_path / "graphs.pc"
    path.write_bytes(write_planar_code([cnet, tetrahedron]))
    assert path.read_bytes().startswith(HEADER)
    back = list(read_planar_code(path))
    assert [g.rotation for g in back] == [cnet.rotation, tetrahedron.rotation]
    assert list(read_planar_code(str(path)))[1] == back[1]


def test_write_without_header(tetrahedron):
    assert write_planar_code([tetrahedron], header=False) == K4_RECORD


def test_reading_is_lazy():
    stream = read_planar_code(K4_RECORD + bytes([3, 2, 0]))
    first = next(stream)
    assert first.n == 4
    with pytest.raises(GraphFormatError):
        next(stream)


def test_bad_header():
    with pytest.raises(GraphFormatError) as excinfo:
        list(read_planar_code(b">>planar_codeXX" + K4_RECORD))
    assert excinfo.value.offset == 0


def test_neighbour_out_of_range():
    data = bytes([4, 2, 3, 9, 0])
    with pytest.raises(GraphFormatError, match="byte offset 3") as excinfo:
        list(read_planar_code(data))
    assert excinfo.value.offset == 3


def test_zero_vertex_count():
    with pytest.raises(GraphFormatError, match="vertex count 0"):
        list(read_planar_code(HEADER + b"\x00"))


def test_truncated_record():
    with pytest.raises(GraphFormatError, match="truncated") as excinfo:
        list(read_planar_code(K4_RECORD[:-1]))
    assert excinfo.value.offset == 16


def test_inconsistent_record_reports_its_start():
    one_sided = bytes([3, 2, 3, 0, 1, 0, 2, 0])
    with pytest.raises(GraphFormatError, match="graph 2") as excinfo:
        list(read_planar_code(K4_RECORD + one_sided))
    assert excinfo.value.offset == len(K4_RECORD)


def test_rotation_text_round_trip():
    assert format_rotation_text(parse_rotation_text(CNET_ROTATION)) == CNET_ROTATION
    assert format_rotation_text(parse_rotation_text(TETRAHEDRON_ROTATION + ";\n")) == TETRAHEDRON_ROTATION


def test_rotation_text_matches_stream(tetrahedron):
    [e] = list(read_planar_code(K4_RECORD))
    assert canonical_embedding_code(e) == canonical_embedding_code(tetrahedron)


@pytest.mark.parametrize("text, offset", [
    ("2,x;1", 2),
    ("2;;1", 2),
    ("2;", 0),
    ("", 0),
])
def test_bad_rotation_text(text, offset):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_rotation_text(text)
    assert excinfo.value.offset == offset
