"""
Tests for isomer classes and canonical tablecodes
"""

from collections import defaultdict

import pytest

from app.core.bouwkamp import parse_record, place_elements, tablecode_of
from app.core.dissection import transform, validate_tiling
from app.core.exceptions import InvalidTiling, ResourceLimit
from app.core.isomers import canonicalize, enumerate_isomers, isomer_closure
from app.models.dissection import Dissection, Element, Symmetry
from tests.conftest import RECTANGLE_33X32, WILLCOCKS_TABLECODE


def test_willcocks_canonical_form(willcocks):
    form = canonicalize(willcocks)
    assert form.tablecode.text() == WILLCOCKS_TABLECODE
    assert form.isomer_count == 4
    assert validate_tiling(form.dissection).ok


def test_every_isomer_in_every_orientation_canonicalizes_alike(willcocks):
    isomers = enumerate_isomers(willcocks)
    assert len(isomers) == 4
    for isomer in isomers:
        for sym in Symmetry:
            assert canonicalize(transform(isomer, sym)).tablecode.text() == WILLCOCKS_TABLECODE


def test_isomers_are_listed_highest_first(willcocks):
    isomers = enumerate_isomers(willcocks)
    keys = [tablecode_of(d).numeric_key() for d in isomers]
    assert keys == sorted(keys, reverse=True)
    assert tablecode_of(isomers[0]).text() == WILLCOCKS_TABLECODE


def test_isomers_are_distinct_tilings(willcocks):
    isomers = enumerate_isomers(willcocks)
    assert len({d.boxes for d in isomers}) == 4
    for d in isomers:
        assert validate_tiling(d).ok
        assert sorted(d.sizes) == sorted(willcocks.sizes)


def test_simple_rectangle_is_its_own_class(rectangle_33x32):
    form = canonicalize(transform(rectangle_33x32, Symmetry.ANTI_TRANSPOSE))
    assert form.tablecode.text() == RECTANGLE_33X32
    assert form.isomer_count == 1
    assert len(enumerate_isomers(rectangle_33x32)) == 1


def test_canonicalize_is_idempotent(willcocks, rectangle_33x32):
    for d in (willcocks, rectangle_33x32):
        once = canonicalize(d)
        assert canonicalize(once.dissection) == once


def test_oblong_canonical_form_is_landscape(rectangle_33x32):
    form = canonicalize(transform(rectangle_33x32, Symmetry.ROT90))
    assert form.tablecode.width > form.tablecode.height


def test_catalog_orientation_is_recovered(corpus_by_id):
    d = place_elements(parse_record(corpus_by_id["235a"]))
    for sym in (Symmetry.ROT90, Symmetry.FLIP_Y, Symmetry.TRANSPOSE):
        assert canonicalize(transform(d, sym)).tablecode == tablecode_of(d)


def test_large_isomer_class(corpus_by_id):
    d = place_elements(parse_record(corpus_by_id["1015b"]))
    assert len(enumerate_isomers(d)) == 48


def test_type_two_isomer_class(corpus_by_id):
    d = place_elements(parse_record(corpus_by_id["608a"]))
    assert canonicalize(d).isomer_count == 16


def test_closure_limit(willcocks):
    with pytest.raises(ResourceLimit):
        isomer_closure(willcocks, limit=2)


def test_canonicalize_needs_a_tiling():
    d = Dissection(width=2, height=1, elements=(Element(x=0, y=0, size=1),))
    with pytest.raises(InvalidTiling):
        canonicalize(d)


@pytest.mark.slow
def test_corpus_isomer_counts(corpus):
    """Test recounted isomers match every listed value and the per-order totals"""
    entries = defaultdict(int)
    isomers = defaultdict(int)
    for number, text in corpus:
        code = parse_record(text)
        d = place_elements(code)
        assert validate_tiling(d).ok, f"line {number}"
        assert d.is_square and d.width == code.extended.width, f"line {number}"
        assert len(set(d.sizes)) == d.order, f"line {number}"
        form = canonicalize(d)
        count = form.isomer_count
        assert count == code.extended.isomer_count, f"line {number}"
        assert canonicalize(form.dissection) == form, f"line {number}"
        assert canonicalize(transform(d, Symmetry.ROT270)).tablecode == form.tablecode, f"line {number}"
        entries[d.order] += 1
        isomers[d.order] += count
    assert dict(entries) == {24: 1, 25: 2, 26: 16, 27: 46, 28: 143}
    assert dict(isomers) == {24: 4, 25: 12, 26: 100, 27: 220, 28: 948}
