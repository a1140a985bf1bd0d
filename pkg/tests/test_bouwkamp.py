"""
Tests for Bouwkampcode and tablecode parsing, placement and emission
"""

import pytest

from app.core.bouwkamp import (
    emit_all_codes,
    emit_bouwkampcode,
    format_record,
    parse_bouwkampcode,
    parse_record,
    parse_tablecode,
    place_elements,
    place_sizes,
    tablecode_of,
    to_tablecode,
)
from app.core.dissection import transform, validate_tiling
from app.core.exceptions import BouwkampSyntaxError, PlacementError
from app.models.dissection import Symmetry
from tests.conftest import WILLCOCKS, WILLCOCKS_TABLECODE


def test_parse_willcocks_code():
    code = parse_bouwkampcode(WILLCOCKS)
    assert len(code.groups) == 12
    assert code.order == 24
    assert code.groups[0] == (81, 56, 38)
    assert code.text() == WILLCOCKS


def test_parse_smallest_code():
    code = parse_bouwkampcode("(1,1)")
    assert code.groups == ((1, 1),)
    assert code.order == 2


def test_whitespace_between_tokens():
    assert parse_bouwkampcode(" ( 3 , 2 ) (1 ,1)( 2) ").groups == ((3, 2), (1, 1), (2,))


@pytest.mark.parametrize("text, position", [
    ("(3,2", 4),
    ("()", 1),
    ("(1,0)", 3),
    ("(1,,2)", 3),
    ("(1(2))", 2),
    ("(1,2)x", 5),
])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(BouwkampSyntaxError) as excinfo:
        parse_bouwkampcode(text)
    assert excinfo.value.position == position


def test_header_and_metadata():
    code = parse_bouwkampcode(
        f"24 175 175 {WILLCOCKS} # id=175a isomers=4 type=D11 discoverer=THW years=1948 note=x"
    )
    ext = code.extended
    assert (ext.order, ext.width, ext.height) == (24, 175, 175)
    assert ext.id == "175a"
    assert ext.isomer_count == 4
    assert ext.type_code == "D11"
    assert ext.discoverer == "THW"
    assert ext.extra == (("note", "x"),)
    assert list(ext.metadata()) == ["id", "isomers", "type", "discoverer", "years", "note"]


def test_header_order_must_match():
    with pytest.raises(BouwkampSyntaxError, match="order field is 23"):
        parse_bouwkampcode(f"23 175 175 {WILLCOCKS}")


def test_bad_metadata_item():
    with pytest.raises(BouwkampSyntaxError, match="not key=value"):
        parse_bouwkampcode("(1,1) # lonely")


def test_place_smallest_code():
    d = place_elements(parse_bouwkampcode("(1,1)"))
    assert (d.width, d.height) == (2, 1)
    assert d.boxes == ((0, 0, 1), (1, 0, 1))


def test_place_willcocks(willcocks):
    assert (willcocks.width, willcocks.height) == (175, 175)
    assert willcocks.sizes == tuple(int(s) for s in WILLCOCKS_TABLECODE.split()[3:])


def test_element_does_not_fit_segment():
    with pytest.raises(PlacementError) as excinfo:
        place_elements(parse_bouwkampcode("(1,2)(2)"))
    assert excinfo.value.element_index == 2


def test_uneven_bottom_edge():
    with pytest.raises(PlacementError, match="leftover gap"):
        place_elements(parse_bouwkampcode("(2,1)"))


def test_group_overrunning_its_segment():
    with pytest.raises(PlacementError, match="overruns"):
        place_elements(parse_bouwkampcode("(2,1)(1,1)"))


def test_declared_width_must_match_first_group():
    with pytest.raises(PlacementError, match="first group spans"):
        place_elements(parse_bouwkampcode("2 3 1 (1,1)"))


def test_crossed_segment_variants_agree():
    """Test merged and split cross segments place identically"""
    merged = place_elements(parse_bouwkampcode("(1,1)(1,1)"))
    split = place_elements(parse_bouwkampcode("(1,1)(1)(1)"))
    assert merged == split
    assert to_tablecode("(1,1)(1,1)") == to_tablecode("(1,1)(1)(1)")
    assert emit_bouwkampcode(split).text() == "(1,1)(1,1)"


def test_tablecode_text():
    assert to_tablecode(WILLCOCKS).text() == WILLCOCKS_TABLECODE
    assert to_tablecode("(1,1)").text() == "2 2 1 1 1"


def test_parse_tablecode():
    line, ext = parse_tablecode(WILLCOCKS_TABLECODE + " # id=175a")
    assert line.order == 24
    assert (line.width, line.height) == (175, 175)
    assert ext.id == "175a"
    assert str(line) == WILLCOCKS_TABLECODE


@pytest.mark.parametrize("text", ["3 2 1 1 1", "2 2 1", "2 2 1 1 (1)"])
def test_bad_tablecodes(text):
    with pytest.raises(BouwkampSyntaxError):
        parse_tablecode(text)


def test_record_forms_agree():
    from_table = parse_record(WILLCOCKS_TABLECODE)
    from_code = parse_record(WILLCOCKS)
    assert from_table.groups == from_code.groups
    assert place_elements(from_table) == place_elements(from_code)


def test_place_sizes_infers_height(rectangle_33x32):
    d = place_sizes(rectangle_33x32.sizes, 33)
    assert d == rectangle_33x32
    assert validate_tiling(d).ok


def test_emit_reproduces_catalog_record(corpus_by_id):
    code = parse_record(corpus_by_id["175a"])
    assert emit_bouwkampcode(place_elements(code)).text() == code.text()
    assert format_record(code, code.extended.metadata()) == corpus_by_id["175a"]


def test_emit_all_codes_round_trip(rectangle_33x32):
    codes = emit_all_codes(rectangle_33x32)
    assert len(codes) == 8
    for sym, text in zip(Symmetry, codes):
        assert place_elements(parse_bouwkampcode(text)) == transform(rectangle_33x32, sym)


def test_emit_all_codes_includes_catalog_orientation(willcocks):
    assert WILLCOCKS in emit_all_codes(willcocks)


def test_symmetric_square_has_one_code():
    d = place_elements(parse_bouwkampcode("(1,1)(1,1)"))
    assert set(emit_all_codes(d)) == {"(1,1)(1,1)"}


def test_format_record_with_header_and_metadata():
    code = parse_bouwkampcode(f"24 175 175 {WILLCOCKS}")
    text = format_record(code, {"id": "175a", "isomers": "4"})
    assert text == f"24 175 175 {WILLCOCKS} # id=175a isomers=4"
    assert format_record(tablecode_of(place_elements(code))) == WILLCOCKS_TABLECODE
