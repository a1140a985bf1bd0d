"""
Catalog of canonical perfect squared squares
"""

import logging
from collections import defaultdict
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

from app.core.bouwkamp import format_record, parse_record, place_elements
from app.core.dissection import classify
from app.core.exceptions import CatalogError, CodeError, InvalidTiling, ResourceLimit
from app.core.isomers import canonicalize
from app.models.catalog import CatalogEntry, OrderStats
from app.models.dissection import Dissection
from app.utils.file_utils import atomic_write_text, iter_records

logger = logging.getLogger(__name__)


def id_letters(index: int, upper: bool = False) -> str:
    """0 -> a, 25 -> z, 26 -> aa, 27 -> ab, ..."""
    letters = ""
    index += 1
    while index:
        index, rest = divmod(index - 1, 26)
        letters = chr(ord("a") + rest) + letters
    return letters.upper() if upper else letters


def entry_for(d: Dissection, provenance: Iterable[Tuple[str, str]] = ()) -> CatalogEntry:
    """Canonicalize ``d`` and classify the canonical form."""
    canonical = canonicalize(d)
    return CatalogEntry(
        tablecode=canonical.tablecode,
        isomer_count=canonical.isomer_count,
        classification=classify(canonical.dissection),
        provenance=tuple(provenance),
    )


class Catalog:
    """Entries keyed by canonical tablecode; merging is order independent"""

    def __init__(self, entries: Iterable[CatalogEntry] = ()):
        self.entries: Dict[str, CatalogEntry] = {}
        for entry in entries:
            self.add(entry)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def add(self, entry: CatalogEntry) -> bool:
        """Insert ``entry``; returns False if its tablecode is already present."""
        if entry.key in self.entries:
            return False
        self.entries[entry.key] = entry
        return True

    def merge(self, other: "Catalog") -> int:
        return sum(self.add(entry) for entry in other.sorted())

    def sorted(self) -> List[CatalogEntry]:
        """Entries by size, then numeric tablecode."""
        return sorted(self.entries.values(), key=lambda e: (e.size, e.tablecode.numeric_key()))

    def assign_ids(self) -> List[Tuple[CatalogEntry, str]]:
        """Give every entry its rule ID; returns ``(entry, legacy id)`` pairs that disagreed.

        Letters run per (order, size, structure) in ascending numeric tablecode,
        lowercase for compound and uppercase for simple entries.
        """
        groups: Dict[Tuple[int, int, bool], List[CatalogEntry]] = defaultdict(list)
        for entry in self.entries.values():
            groups[(entry.tablecode.order, entry.size, entry.is_compound)].append(entry)

        mismatches = []
        for (_, size, compound), members in groups.items():
            members.sort(key=lambda e: e.tablecode.numeric_key())
            for index, entry in enumerate(members):
                rule_id = f"{size}{id_letters(index, upper=not compound)}"
                if entry.id is not None and entry.id != rule_id:
                    mismatches.append((entry, entry.id))
                self.entries[entry.key] = entry.model_copy(update={"id": rule_id})
        return mismatches

    def lines(self) -> List[str]:
        return [format_record(e.tablecode, e.metadata()) for e in self.sorted()]

    def write(self, path: Union[str, Path]) -> None:
        lines = self.lines()
        atomic_write_text(path, "\n".join(lines) + ("\n" if lines else ""))
        logger.info(f"Wrote {len(lines)} catalog entries to {path}")

    @classmethod
    def read(cls, path: Union[str, Path], recount: bool = False) -> "Catalog":
        """Load tablecode or Bouwkampcode lines under their canonical tablecode.

        Lines in any orientation or isomer of one square collapse into a single
        entry. Isomer counts come from metadata unless ``recount``.
        """
        catalog = cls()
        for number, text in iter_records(path):
            try:
                code = parse_record(text)
                canonical = canonicalize(place_elements(code))
            except (CodeError, InvalidTiling, ResourceLimit) as e:
                raise CatalogError(f"{path}:{number}: {e.message}") from e
            fields = code.extended
            provenance = [
                (key, getattr(fields, key))
                for key in ("discoverer", "years")
                if getattr(fields, key) is not None
            ]
            provenance.extend(fields.extra)
            isomers = fields.isomer_count
            if recount or isomers is None:
                isomers = canonical.isomer_count
            entry = CatalogEntry(
                tablecode=canonical.tablecode,
                id=fields.id,
                isomer_count=isomers,
                classification=classify(canonical.dissection),
                provenance=tuple(provenance),
            )
            if not catalog.add(entry):
                logger.warning(f"{path}:{number}: duplicate entry {entry.key}")
                catalog._absorb(entry)
        logger.info(f"Loaded {len(catalog)} catalog entries from {path}")
        return catalog

    def _absorb(self, duplicate: CatalogEntry) -> None:
        """Fold a duplicate's id and provenance into the stored entry."""
        kept = self.entries[duplicate.key]
        extra = tuple(p for p in duplicate.provenance if p not in kept.provenance)
        self.entries[duplicate.key] = kept.model_copy(update={
            "id": kept.id if kept.id is not None else duplicate.id,
            "provenance": kept.provenance + extra,
        })

    def stats(self) -> List[OrderStats]:
        by_order: Dict[int, OrderStats] = {}
        for entry in self.sorted():
            order = entry.tablecode.order
            stats = by_order.setdefault(order, OrderStats(order=order))
            stats.entries += 1
            stats.isomers += entry.isomer_count
            if entry.is_compound:
                stats.compound += 1
            else:
                stats.simple += 1
            label = entry.classification.type_code or "-"
            stats.types[label] = stats.types.get(label, 0) + 1
        return [by_order[k] for k in sorted(by_order)]

    def get(self, key: str) -> Optional[CatalogEntry]:
        return self.entries.get(key)
