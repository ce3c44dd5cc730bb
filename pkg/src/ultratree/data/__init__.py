"""Bundled data: the sample category corpus and the Berlin-Kay color order.

Both files are plain editable data.  The color ordering follows the standard
published staging (black/white before red, red before green and yellow, both
before blue, then brown, then the late terms); swap in any other order as a
JSON document of ``nodes`` and ``(earlier, later)`` edges.
"""

from __future__ import annotations

import json
from importlib.resources import files

from ..hierarchy import PartialOrder
from ..trees import PhraseTree, parse_tree_lines


def _read(name: str) -> str:
    return files(__package__).joinpath(name).read_text(encoding="utf-8")


def load_category_corpus() -> list[PhraseTree]:
    """The five-tree sample corpus behind the category distance matrix."""
    return parse_tree_lines(_read("category_corpus.trees").splitlines(), source="category_corpus.trees")


def load_berlin_kay_order() -> PartialOrder:
    """The bundled color-term partial order."""
    return PartialOrder.from_json_dict(json.loads(_read("berlin_kay.json")))
