"""JSON documents for graphs and enumeration results, and DOT export."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graph import CanonicalKey, RGraph, canonical
from .ring import RingElement, RingId
from .spectral import SymMatrix

SCHEMA_KEYS = {"ring", "n", "matrix"}
OPTIONAL_KEYS = {"name", "source"}


class DocumentError(ValueError):
    """A graph document is malformed or violates a matrix invariant."""


@dataclass(frozen=True)
class GraphDocument:
    ring: str
    n: int
    matrix: list
    name: str | None = None
    source: str | None = None

    def to_dict(self) -> dict:
        out = {"ring": self.ring, "n": self.n, "matrix": self.matrix}
        if self.name is not None:
            out["name"] = self.name
        if self.source is not None:
            out["source"] = self.source
        return out

    def dumps(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, obj) -> "GraphDocument":
        if not isinstance(obj, dict):
            raise DocumentError("graph document must be a JSON object")
        missing = SCHEMA_KEYS - set(obj)
        if missing:
            raise DocumentError(f"missing fields: {sorted(missing)}")
        extra = set(obj) - SCHEMA_KEYS - OPTIONAL_KEYS
        if extra:
            raise DocumentError(f"unknown fields: {sorted(extra)}")
        for key in OPTIONAL_KEYS:
            if key in obj and obj[key] is not None and not isinstance(obj[key], str):
                raise DocumentError(f"field {key!r} must be a string")
        n = obj["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DocumentError(f"n must be a positive integer, got {n!r}")
        return cls(obj["ring"], n, obj["matrix"], obj.get("name"), obj.get("source"))


def serialize(G: RGraph, name: str | None = None, source: str | None = None) -> GraphDocument:
    """Encode G with reduced element encodings."""
    m = G.matrix
    rows = [[m[i, j].to_json() for j in range(G.n)] for i in range(G.n)]
    return GraphDocument(G.ring.tag, G.n, rows, name if name is not None else G.name, source)


def parse(doc: GraphDocument | dict | str) -> RGraph:
    """Decode a graph document (object, dict or JSON text) into an RGraph."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, GraphDocument):
        doc = GraphDocument.from_dict(doc)
    try:
        ring = RingId.parse(doc.ring) if isinstance(doc.ring, str) else None
    except ValueError:
        ring = None
    if ring is None:
        raise DocumentError(f"unknown ring tag {doc.ring!r}")
    rows = doc.matrix
    if not isinstance(rows, list) or len(rows) != doc.n:
        raise DocumentError(f"matrix must be a list of {doc.n} rows")
    entries = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != doc.n:
            raise DocumentError(f"row {i} must have {doc.n} entries")
        try:
            entries.append([RingElement.from_json(x) for x in row])
        except ValueError as exc:
            raise DocumentError(f"row {i}: {exc}") from None
    try:
        matrix = SymMatrix(entries, ring)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    return RGraph(matrix, name=doc.name)


def load_graph(path: str) -> RGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def dump_graph(G: RGraph, path: str, **meta) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(G, **meta).dumps(indent=1))
        fh.write("\n")


# ---------------------------------------------------------------------------
# enumeration results


def level_to_json(level, which: str = "sprime") -> dict:
    """One enumeration level; ``which`` is 'sprime' (all members) or 's'."""
    if which not in ("sprime", "s"):
        raise ValueError(f"unknown set {which!r}")
    members = []
    for key, G in level.members.items():
        if which == "s" and not level.in_s[key]:
            continue
        members.append({
            "key": key.hex(),
            "in_s": bool(level.in_s[key]),
            "ring": level.member_ring(key).tag,
            "parents": [p.hex() for p in level.parents.get(key, ())],
            "graph": serialize(G).to_dict(),
        })
    return {"n": level.n, "ring": level.ring.tag, "proper": level.proper, "count": len(members), "members": members}


def levels_to_json(levels: Sequence, which: str = "sprime") -> dict:
    return {"set": which, "levels": [level_to_json(L, which) for L in levels]}


def report_to_json(report, names: dict | None = None) -> dict:
    """A MaximalityReport as JSON; ``names`` maps keys to catalog names."""
    names = names or {}
    out = []
    for key, status in report.status.items():
        entry = {
            "key": key.hex(),
            "n": report.level_of[key],
            "status": status,
            "graph": serialize(report.graphs[key]).to_dict(),
        }
        if key in names:
            entry["name"] = str(names[key])
        if key in report.family:
            entry["template"] = report.family[key]
        w = report.witness.get(key)
        if w is not None:
            entry["witness"] = serialize(w).to_dict()
        out.append(entry)
    return {"members": out}


# ---------------------------------------------------------------------------
# DOT


def _dot_label(x: RingElement) -> str:
    return str(x).replace('"', '\\"')


def to_dot(G: RGraph, name: str | None = None) -> str:
    """Graphviz rendering; negative edges and charges are drawn dashed.

    Edge labels show |w| when w is not 1; charge labels show the charge
    itself.
    """
    title = name or G.name or "G"
    lines = [f'graph "{title}" {{', "  node [shape=circle];"]
    for v in range(G.n):
        c = G.charge(v)
        attrs = []
        if c:
            attrs.append(f'xlabel="{_dot_label(c)}"')
            attrs.append('style="dashed"' if c.sign() < 0 else 'style="bold"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v, w in G.edges():
        attrs = []
        neg = w.sign() < 0
        mag = -w if neg else w
        if mag != 1:
            attrs.append(f'label="{_dot_label(mag)}"')
        if neg:
            attrs.append("style=dashed")
        lines.append(f"  {u} -- {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"


def canonical_document(G: RGraph) -> tuple[CanonicalKey, GraphDocument]:
    key = canonical(G)
    return key, serialize(key.graph(G.ring), name=G.name)
