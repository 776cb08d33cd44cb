"""JSON documents: tower descriptions, rank tables, decomposition results.

Tower document::

    {"base": "point" | {"tate": {"<twist>": <mult>, ...}}
                     | {"chow_ranks": [<rank>, ...], "dim": <n>},
     "fibres": ["Gr 2 4", "P 1", "GP B 3 levi=1,2", "cells 0,1,1,2"]}

Rank table document::

    {"entries": [[<p>, <q>, <rank>], ...]}

Counts may be JSON integers or decimal strings; output always uses strings,
so arbitrarily large values survive any JSON reader.
"""

from __future__ import annotations

import json

from .cellular import format_fibre, parse_fibre
from .errors import DomainError, ParseError
from .leray_hirsch import FreeChowBase, Point, RankTable, TateBase, TowerSpec
from .tate import TateMotive

TOWER_KEYS = {"base", "fibres"}
RESULT_KEYS = {"tower", "fibre_dimensions", "dimension", "motive", "chow_ranks", "poincare", "higher_chow"}


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Locator:
    """Best-effort source positions for values inside an already-decoded document."""

    def __init__(self, text):
        self.text = text or ""

    def find(self, value):
        idx = self.text.find(json.dumps(value, ensure_ascii=False))
        return _position(self.text, idx) if idx >= 0 else (None, None)

    def error(self, message, value=None):
        line, col = self.find(value) if value is not None else (None, None)
        return ParseError(message, line, col)


def loads(text, what="document"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {what}: {exc.msg}", exc.lineno, exc.colno) from None


def _count(value, loc, what):
    if isinstance(value, bool):
        raise loc.error(f"{what} must be a nonnegative integer, got {value!r}", value)
    if isinstance(value, int):
        n = value
    elif isinstance(value, str) and value.isdigit():
        n = int(value)
    else:
        raise loc.error(f"{what} must be a nonnegative integer, got {value!r}", value)
    if n < 0:
        raise loc.error(f"{what} must be nonnegative, got {n}", value)
    return n


def parse_base(obj, loc):
    if obj == "point":
        return Point()
    if isinstance(obj, str):
        raise loc.error(f"unknown base {obj!r}; expected \"point\" or an object", obj)
    if not isinstance(obj, dict):
        raise loc.error("base must be \"point\" or an object")
    keys = set(obj)
    if keys == {"tate"}:
        mult = obj["tate"]
        if not isinstance(mult, dict):
            raise loc.error("base.tate must map twist -> multiplicity", "tate")
        terms = {}
        for k, v in mult.items():
            if not (isinstance(k, str) and k.isdigit()):
                raise loc.error(f"twist index must be a nonnegative integer, got {k!r}", k)
            terms[int(k)] = _count(v, loc, f"multiplicity at twist {k}")
        return TateBase(TateMotive(terms))
    if keys == {"chow_ranks", "dim"}:
        ranks = obj["chow_ranks"]
        if not isinstance(ranks, list):
            raise loc.error("base.chow_ranks must be a list", "chow_ranks")
        ranks = [_count(r, loc, "Chow rank") for r in ranks]
        dim = _count(obj["dim"], loc, "base dim")
        try:
            return FreeChowBase(tuple(ranks), dim)
        except DomainError as exc:
            raise loc.error(str(exc), "chow_ranks") from None
    unknown = sorted(keys - {"tate", "chow_ranks", "dim"})
    if unknown:
        raise loc.error(f"unknown key {unknown[0]!r} in base", unknown[0])
    raise loc.error("base object needs either 'tate' or both 'chow_ranks' and 'dim'", "base")


def parse_base_text(text):
    return parse_base(loads(text, "base"), _Locator(text))


def parse_fibres(items, loc):
    if not isinstance(items, list):
        raise loc.error("fibres must be a list of descriptor strings", "fibres")
    out = []
    for i, item in enumerate(items):
        if not isinstance(item, str):
            raise loc.error(f"fibres[{i}] must be a string, got {item!r}")
        try:
            out.append(parse_fibre(item))
        except ParseError as exc:
            line, col = loc.find(item)
            inner = exc.column or 1
            msg = f"fibres[{i}] {item!r}: {exc.reason}"
            # +1 skips the opening quote of the JSON string
            raise ParseError(msg, line, None if col is None else col + inner) from None
    return out


def tower_from_obj(obj, text=None) -> TowerSpec:
    loc = _Locator(text)
    if not isinstance(obj, dict):
        raise ParseError("tower document must be a JSON object", 1, 1)
    if "tower" in obj and set(obj) <= RESULT_KEYS:
        # a decompose result document: re-run its embedded tower
        return tower_from_obj(obj["tower"], text)
    unknown = sorted(set(obj) - TOWER_KEYS)
    if unknown:
        raise loc.error(f"unknown key {unknown[0]!r} in tower document", unknown[0])
    base = parse_base(obj.get("base", "point"), loc)
    return TowerSpec(base, parse_fibres(obj.get("fibres", []), loc))


def parse_tower_document(text) -> TowerSpec:
    return tower_from_obj(loads(text, "tower document"), text)


def base_to_obj(base):
    if isinstance(base, Point):
        return "point"
    if isinstance(base, TateBase):
        return {"tate": {str(n): str(m) for n, m in base.motive.terms()}}
    return {"chow_ranks": [str(r) for r in base.ranks], "dim": base.dim}


def tower_to_obj(t: TowerSpec):
    return {"base": base_to_obj(t.base), "fibres": [format_fibre(f) for f in t.fibres]}


def parse_rank_table(text) -> RankTable:
    obj = loads(text, "rank table")
    loc = _Locator(text)
    if not isinstance(obj, dict) or set(obj) != {"entries"}:
        raise ParseError("rank table must be an object with a single key 'entries'", 1, 1)
    entries = {}
    for i, row in enumerate(obj["entries"] if isinstance(obj["entries"], list) else [None]):
        if not isinstance(row, list) or len(row) != 3:
            raise loc.error(f"entries[{i}] must be [p, q, rank]")
        p, q, r = (_count(v, loc, name) for v, name in zip(row, ("p", "q", "rank")))
        entries[p, q] = entries.get((p, q), 0) + r
    return RankTable(entries)


def rank_table_to_obj(table: RankTable):
    return {"entries": [[p, q, str(r)] for (p, q), r in table.items()]}


def dumps(obj) -> str:
    """Canonical serialization: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
