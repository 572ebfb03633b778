"""Versioned text documents for every object the toolkit manipulates.

One JSON schema covers all five kinds (dessin, skeleton, block-spec,
glue-plan, script).  Serialization keeps the original vertex/edge names —
scripts reference sites by dart name, so renaming on save would orphan every
stored script — but the text itself is canonical: keys are emitted in sorted
order with fixed indentation, so ``serialize(parse(text)) == text`` for any
document already in that form, and two isomorphic maps serialized from equal
builders produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .blocks import BlockSpec, GluePlan
from .core_map import DiskMap, MapError, build_map
from .dessin import validate_dessin
from .skeleton import check_skeleton

FORMAT_VERSION = 1
KINDS = ("dessin", "skeleton", "block-spec", "glue-plan", "script")


class SchemaError(MapError):
    """Malformed document text; the message names the offending field."""


@dataclass(frozen=True)
class Document:
    kind: str
    payload: object
    notes: tuple = ()
    version: int = FORMAT_VERSION


# ---------------------------------------------------------------------------
# per-kind payload codecs


def _map_to_data(m: DiskMap) -> dict:
    return {
        "boundary": list(m.boundary),
        "vertex_tags": dict(m.vertex_tags),
        "rotations": {v: list(r) for v, r in m.rotations.items()},
        "edge_tags": dict(m.edge_tags),
        "edge_head": dict(m.edge_head),
        "boundary_edges": list(m.boundary_edges),
        "anchors": dict(m.anchors),
    }


def _map_from_data(data: dict, where: str) -> DiskMap:
    fields = (
        "boundary", "vertex_tags", "rotations", "edge_tags",
        "edge_head", "boundary_edges", "anchors",
    )
    for f in fields:
        if f not in data:
            raise SchemaError(f"{where}: missing field {f!r}")
    return build_map(
        data["boundary"],
        data["vertex_tags"],
        {v: tuple(r) for v, r in data["rotations"].items()},
        data["edge_tags"],
        data["edge_head"],
        data["boundary_edges"],
        data["anchors"],
    )


def _spec_to_data(spec: BlockSpec) -> dict:
    return {
        "d": spec.d,
        "marks": spec.marks,
        "boundary": list(spec.boundary),
        "chords": [list(c) for c in spec.chords],
        "blacks": list(spec.blacks),
    }


def _spec_from_data(data: dict) -> BlockSpec:
    if "d" not in data:
        raise SchemaError("block-spec payload: missing field 'd'")
    return BlockSpec(
        d=data["d"],
        marks=data.get("marks"),
        boundary=tuple(data.get("boundary", ())),
        chords=tuple(tuple(c) for c in data.get("chords", ())),
        blacks=tuple(data.get("blacks", ())),
    )


def _deep_tuple(x):
    return tuple(_deep_tuple(e) for e in x) if isinstance(x, list) else x


def _deep_list(x):
    return [_deep_list(e) for e in x] if isinstance(x, tuple) else x


def _payload_to_data(kind: str, payload) -> object:
    if kind in ("dessin", "skeleton"):
        return _map_to_data(payload)
    if kind == "block-spec":
        return _spec_to_data(payload)
    if kind == "glue-plan":
        return {
            "blocks": [_map_to_data(g) for g in payload.blocks],
            "instructions": [_deep_list(i) for i in payload.instructions],
        }
    if kind == "script":
        return {"entries": [_deep_list(e) for e in payload]}
    raise SchemaError(f"unknown document kind {kind!r}")


def _payload_from_data(kind: str, data) -> object:
    if kind == "dessin":
        m = _map_from_data(data, "dessin payload")
        validate_dessin(m)
        return m
    if kind == "skeleton":
        m = _map_from_data(data, "skeleton payload")
        check_skeleton(m)
        return m
    if kind == "block-spec":
        spec = _spec_from_data(data)
        spec.resolved()  # validates marks/boundary consistency
        return spec
    if kind == "glue-plan":
        if "blocks" not in data:
            raise SchemaError("glue-plan payload: missing field 'blocks'")
        blocks = []
        for i, b in enumerate(data["blocks"]):
            g = _map_from_data(b, f"glue-plan block {i}")
            validate_dessin(g)
            blocks.append(g)
        return GluePlan(
            tuple(blocks),
            tuple(_deep_tuple(i) for i in data.get("instructions", ())),
        )
    if kind == "script":
        if "entries" not in data:
            raise SchemaError("script payload: missing field 'entries'")
        entries = tuple(_deep_tuple(e) for e in data["entries"])
        for e in entries:
            if not (isinstance(e, tuple) and e and isinstance(e[0], str)):
                raise SchemaError(f"script payload: malformed entry {e!r}")
        return entries
    raise SchemaError(f"unknown document kind {kind!r}")


# ---------------------------------------------------------------------------
# documents


def serialize(doc: Document) -> str:
    data = {
        "version": doc.version,
        "kind": doc.kind,
        "notes": list(doc.notes),
        "payload": _payload_to_data(doc.kind, doc.payload),
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def parse(text: str) -> Document:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise SchemaError("document is not an object")
    for f in ("version", "kind", "payload"):
        if f not in data:
            raise SchemaError(f"missing field {f!r}")
    if data["version"] != FORMAT_VERSION:
        raise SchemaError(f"unsupported format version {data['version']!r}")
    if data["kind"] not in KINDS:
        raise SchemaError(f"unknown document kind {data['kind']!r}")
    payload = _payload_from_data(data["kind"], data["payload"])
    return Document(
        kind=data["kind"],
        payload=payload,
        notes=tuple(data.get("notes", ())),
    )


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def save(path, doc: Document) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(doc))
