"""
Tests for the catalog, its ID rule and checkpoint files
"""

import pytest

from app.core.bouwkamp import parse_record, place_elements, tablecode_of
from app.core.catalog import Catalog, entry_for, id_letters
from app.core.dissection import transform
from app.core.exceptions import CatalogError
from app.models.dissection import Structure, Symmetry
from app.utils.file_utils import (
    atomic_write_text,
    progress_path,
    read_checkpoint,
    write_checkpoint,
)
from tests.conftest import CORPUS, RECTANGLE_33X32, WILLCOCKS, WILLCOCKS_TABLECODE


@pytest.mark.parametrize("index, letters", [
    (0, "a"),
    (1, "b"),
    (25, "z"),
    (26, "aa"),
    (27, "ab"),
    (701, "zz"),
    (702, "aaa"),
])
def test_id_letters(index, letters):
    assert id_letters(index) == letters
    assert id_letters(index, upper=True) == letters.upper()


def test_entry_for_willcocks(willcocks):
    entry = entry_for(willcocks, [("discoverer", "THW")])
    assert entry.key == WILLCOCKS_TABLECODE
    assert entry.size == 175
    assert entry.isomer_count == 4
    assert entry.is_compound
    assert entry.metadata() == {"isomers": "4", "type": "D11", "discoverer": "THW"}


def test_catalog_keeps_one_entry_per_class(willcocks):
    catalog = Catalog()
    assert catalog.add(entry_for(willcocks))
    assert not catalog.add(entry_for(transform(willcocks, Symmetry.ROT90)))
    assert len(catalog) == 1
    assert WILLCOCKS_TABLECODE in catalog


def test_assign_ids(willcocks, rectangle_33x32):
    legacy = entry_for(willcocks).model_copy(update={"id": "175b"})
    catalog = Catalog([legacy, entry_for(rectangle_33x32)])
    mismatches = catalog.assign_ids()
    assert mismatches == [(legacy, "175b")]
    assert catalog.get(WILLCOCKS_TABLECODE).id == "175a"
    # simple entries take uppercase letters
    assert catalog.get(RECTANGLE_33X32).id == "33A"
    assert catalog.assign_ids() == []


def test_sorted_by_size(willcocks, rectangle_33x32):
    catalog = Catalog([entry_for(willcocks), entry_for(rectangle_33x32)])
    assert [e.size for e in catalog.sorted()] == [33, 175]


def test_write_then_read(tmp_path, willcocks, rectangle_33x32):
    catalog = Catalog([entry_for(willcocks), entry_for(rectangle_33x32)])
    catalog.assign_ids()
    path = tmp_path / "out" / "catalog.txt"
    catalog.write(path)
    text = path.read_text()
    assert text.splitlines()[1] == f"{WILLCOCKS_TABLECODE} # id=175a isomers=4 type=D11"
    assert not (tmp_path / "out" / "catalog.txt.tmp").exists()
    assert Catalog.read(path).sorted() == catalog.sorted()


def test_read_computes_missing_isomer_counts(tmp_path):
    path = tmp_path / "one.txt"
    path.write_text(f"# header comment\n\n{WILLCOCKS} # id=175a discoverer=THW\n")
    [entry] = Catalog.read(path).sorted()
    assert entry.isomer_count == 4
    assert entry.id == "175a"
    assert entry.provenance == (("discoverer", "THW"),)


def test_read_keys_by_canonical_tablecode(tmp_path):
    square = place_elements(parse_record(WILLCOCKS_TABLECODE))
    turned = tablecode_of(transform(square, Symmetry.ROT90)).text()
    assert turned != WILLCOCKS_TABLECODE
    path = tmp_path / "orientations.txt"
    path.write_text(f"{WILLCOCKS_TABLECODE} # id=175a isomers=4\n{turned} # discoverer=THW\n")
    catalog = Catalog.read(path)
    assert [(s.order, s.entries, s.isomers) for s in catalog.stats()] == [(24, 1, 4)]
    [entry] = catalog.sorted()
    assert entry.key == WILLCOCKS_TABLECODE
    assert entry.id == "175a"
    assert entry.provenance == (("discoverer", "THW"),)


def test_read_stores_rotated_line_in_canonical_form(tmp_path):
    square = place_elements(parse_record(WILLCOCKS_TABLECODE))
    path = tmp_path / "rotated.txt"
    path.write_text(tablecode_of(transform(square, Symmetry.ROT270)).text() + "\n")
    [entry] = Catalog.read(path).sorted()
    assert entry.key == WILLCOCKS_TABLECODE
    assert entry.isomer_count == 4


def test_read_reports_bad_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text(f"{WILLCOCKS}\n(2,1)\n")
    with pytest.raises(CatalogError, match=":2: "):
        Catalog.read(path)


@pytest.mark.slow
def test_corpus_catalog():
    catalog = Catalog.read(CORPUS)
    assert len(catalog) == 208
    stats = catalog.stats()
    assert [s.order for s in stats] == [24, 25, 26, 27, 28]
    assert [s.entries for s in stats] == [1, 2, 16, 46, 143]
    assert [s.isomers for s in stats] == [4, 12, 100, 220, 948]
    assert all(s.compound == s.entries and s.simple == 0 for s in stats)
    assert all(sum(s.types.values()) == s.entries for s in stats)
    assert all(e.classification.structure == Structure.COMPOUND for e in catalog.sorted())


@pytest.mark.slow
def test_merge_is_idempotent():
    catalog = Catalog.read(CORPUS)
    assert catalog.merge(Catalog.read(CORPUS)) == 0
    empty = Catalog()
    assert empty.merge(catalog) == 208
    assert empty.lines() == catalog.lines()


def test_checkpoint_round_trip(tmp_path):
    output = tmp_path / "catalog.txt"
    assert read_checkpoint(output) == {}
    write_checkpoint(output, {"a.pc": 12, "dir/b.pc": 0})
    assert progress_path(output).name == "catalog.txt.progress"
    assert read_checkpoint(output) == {"a.pc": 12, "dir/b.pc": 0}


def test_bad_checkpoint(tmp_path):
    output = tmp_path / "catalog.txt"
    atomic_write_text(progress_path(output), "a.pc 12\n")
    with pytest.raises(CatalogError):
        read_checkpoint(output)
