"""Bundled group catalog: JSONL records parsed into named permutation groups."""

from __future__ import annotations

import json
import os

from .group import PermGroup
from .groupspec import GroupSpecError, group_from_cycles, parse_group_spec


class CatalogError(ValueError):
    """Raised for malformed catalog files; messages carry the line number."""


class CatalogEntry:
    """A named group loaded from a catalog record."""

    __slots__ = ("name", "group")

    def __init__(self, name: str, group: PermGroup):
        self.name = name
        self.group = group

    def __repr__(self):
        return "CatalogEntry(%s, order %d)" % (self.name, self.group.order())


def bundled_catalog_path() -> str:
    return os.path.join(os.path.dirname(__file__), "data", "small_catalog.jsonl")


def _entry_from_record(record: dict, line_number: int) -> CatalogEntry:
    def fail(message):
        raise CatalogError("line %d: %s" % (line_number, message))

    if not isinstance(record, dict):
        fail("record must be a JSON object")
    name = record.get("name")
    if not isinstance(name, str) or not name:
        fail("missing or empty \"name\"")
    unknown = set(record) - {"name", "spec", "generators", "order"}
    if unknown:
        fail("unknown keys: %s" % ", ".join(sorted(unknown)))
    has_spec = "spec" in record
    has_gens = "generators" in record
    if has_spec == has_gens:
        fail("need exactly one of \"spec\" or \"generators\"")
    try:
        if has_spec:
            group = parse_group_spec(record["spec"])
        else:
            gens = record["generators"]
            if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
                fail("\"generators\" must be a list of cycle strings")
            group = group_from_cycles(gens)
    except GroupSpecError as exc:
        fail(str(exc))
    declared = record.get("order")
    if declared is not None and group.order() != declared:
        fail(
            "declared order %r but computed %d for %s"
            % (declared, group.order(), name)
        )
    return CatalogEntry(name, group)


def load_catalog(path: str):
    """Parse a JSONL catalog; every group is rebuilt and checked against its record."""
    entries = []
    seen = set()
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                record = json.loads(text)
            except json.JSONDecodeError as exc:
                raise CatalogError("line %d: %s" % (line_number, exc)) from None
            entry = _entry_from_record(record, line_number)
            if entry.name in seen:
                raise CatalogError("line %d: duplicate name %s" % (line_number, entry.name))
            seen.add(entry.name)
            entries.append(entry)
    return entries


def load_bundled_catalog():
    return load_catalog(bundled_catalog_path())


_SL23_GENERATORS = ["(1 4 7)(2 8 5)", "(1 6 2 3)(4 7 8 5)"]


def build_catalog_records():
    """The canonical bundled records; the data file is exactly these, one per line."""
    records = []
    for n in range(1, 31):
        records.append({"name": "C%d" % n, "spec": "C%d" % n, "order": n})
    for order in range(4, 43, 2):
        records.append({"name": "D%d" % order, "spec": "D%d" % order, "order": order})
    records.append(
        {"name": "C2xC2", "generators": ["(1 2)", "(3 4)"], "order": 4}
    )
    records.append(
        {"name": "C2xC2xC2", "generators": ["(1 2)", "(3 4)", "(5 6)"], "order": 8}
    )
    records.append({"name": "Q8", "spec": "Q8", "order": 8})
    records.append({"name": "A4", "spec": "A4", "order": 12})
    records.append({"name": "S4", "spec": "S4", "order": 24})
    records.append({"name": "A5", "spec": "A5", "order": 60})
    records.append({"name": "S5", "spec": "S5", "order": 120})
    records.append({"name": "SL(2,3)", "generators": _SL23_GENERATORS, "order": 24})
    records.append({"name": "F5:4", "spec": "F5:4", "order": 20})
    records.append({"name": "F7:3", "spec": "F7:3", "order": 21})
    records.append({"name": "F7:6", "spec": "F7:6", "order": 42})
    return records


def render_catalog(records) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
