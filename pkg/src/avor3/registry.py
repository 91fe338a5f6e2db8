"""Registry of imported cohomological input data.

The package ships a JSON registry holding the building blocks that are
quoted from the literature rather than computed here: cohomology tables
with citations, fibration recipes (which fiber degree carries which base
table at which Tate twist), externally known differential ranks, and
stored pages used as cross-checks.  A different registry file may be
supplied explicitly or through the VORONOI_STRATA_REGISTRY environment
variable; the packaged one is the default.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources

from .mhs import CohomologyTable
from .ssengine import KnownDifferential, SSPage

ENV_VAR = "VORONOI_STRATA_REGISTRY"
FORMAT = "avor3-registry/1"
_PACKAGED = "data/paper_data.json"


@dataclass(frozen=True)
class RegisteredTable:
    table: CohomologyTable
    citation: str
    notes: str = ""

    @property
    def label(self):
        return self.table.label


@dataclass(frozen=True)
class Registry:
    tables: dict
    fibers: dict
    knowns: dict
    pages: dict
    source: str = "packaged"

    def table(self, label) -> RegisteredTable:
        try:
            return self.tables[label]
        except KeyError:
            raise KeyError("registry %r has no table %r" % (self.source, label)) from None

    def fiber(self, name):
        try:
            return self.fibers[name]
        except KeyError:
            raise KeyError("registry %r has no fibration %r" % (self.source, name)) from None

    def known(self, name) -> KnownDifferential:
        try:
            return self.knowns[name]
        except KeyError:
            raise KeyError("registry %r has no known differential %r"
                           % (self.source, name)) from None

    def page(self, label) -> SSPage:
        try:
            return self.pages[label]
        except KeyError:
            raise KeyError("registry %r has no page %r" % (self.source, label)) from None

    def base_tables(self):
        """Plain label -> table mapping, as fibration assembly expects."""
        return {label: rt.table for label, rt in self.tables.items()}


def parse_registry(data, source="memory") -> Registry:
    if data.get("format") != FORMAT:
        raise ValueError("unrecognized registry format %r" % data.get("format"))
    tables = {}
    for item in data.get("tables", ()):
        table = CohomologyTable.from_json_dict(item)
        if table.label in tables:
            raise ValueError("duplicate table label %r" % table.label)
        tables[table.label] = RegisteredTable(table, item.get("citation", ""),
                                              item.get("notes", ""))
    fibers = {}
    for name, items in data.get("fibers", {}).items():
        fibers[name] = tuple((int(q), str(tag), int(twist)) for q, tag, twist in items)
        for _, tag, _ in fibers[name]:
            if tag not in tables:
                raise ValueError("fibration %r references unknown table %r" % (name, tag))
    knowns = {name: KnownDifferential(int(k["r"]), int(k["p"]), int(k["q"]),
                                      int(k["rank"]), k["citation"])
              for name, k in data.get("knowns", {}).items()}
    pages = {}
    for item in data.get("pages", ()):
        page = SSPage.from_json_dict(item)
        if page.label in pages:
            raise ValueError("duplicate page label %r" % page.label)
        pages[page.label] = page
    return Registry(tables, fibers, knowns, pages, source)


def load_registry(path=None) -> Registry:
    """Explicit path wins, then the environment variable, then the packaged file."""
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            return parse_registry(json.load(fh), source=str(path))
    text = resources.files("avor3").joinpath(_PACKAGED).read_text("utf-8")
    return parse_registry(json.loads(text), source="packaged")
