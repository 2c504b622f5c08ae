"""A restricted-JSON document format for algebras, representations and
morphisms.

The profile: one top-level object, integers only (no floats, no booleans
in numeric positions), matrices as row-major nested integer arrays.  The
canonical serialization (sorted keys, two-space indent, LF, trailing
newline) round-trips byte-for-byte: parse(serialize(d)) == d and
serialize(parse(t)) == t for canonical t.  Integers are reduced mod p on
load, morphism commuting squares are validated on load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Optional

from .errors import (
    DocumentError,
    DocumentSyntaxError,
    NonCommutingMorphismError,
    ShapeError,
)
from .linalg import FieldSpec, Matrix
from .quiver import Algebra, Arrow, Quiver, build_algebra
from .rep import Morphism, Representation

FORMAT_VERSION = 1


@dataclass
class Document:
    algebra: Algebra
    representations: Dict[str, Representation] = field(default_factory=dict)
    morphisms: Dict[str, Morphism] = field(default_factory=dict)

    @property
    def fieldspec(self) -> FieldSpec:
        return self.algebra.field

    @property
    def quiver(self) -> Quiver:
        return self.algebra.quiver

    def representation(self, name: str) -> Representation:
        try:
            return self.representations[name]
        except KeyError:
            raise KeyError(f"no representation named {name!r} in document")

    def morphism(self, name: str) -> Morphism:
        try:
            return self.morphisms[name]
        except KeyError:
            raise KeyError(f"no morphism named {name!r} in document")

    def _name_of(self, rep: Representation) -> str:
        for name, r in self.representations.items():
            if r == rep:
                return name
        raise ValueError("morphism endpoint is not a named representation")


def _require_int(value, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ShapeError("expected an integer", location)
    return value


def _require_obj(value, location: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentError("expected an object", location)
    return value


def _require_list(value, location: str) -> list:
    if not isinstance(value, list):
        raise DocumentError("expected an array", location)
    return value


def _parse_matrix(data, rows: int, cols: int, fieldspec: FieldSpec,
                  location: str) -> Matrix:
    data = _require_list(data, location)
    if len(data) != rows:
        raise ShapeError(f"expected {rows} rows, got {len(data)}", location)
    flat = []
    for i, row in enumerate(data):
        row = _require_list(row, f"{location}[{i}]")
        if len(row) != cols:
            raise ShapeError(f"expected {cols} columns, got {len(row)}",
                             f"{location}[{i}]")
        for j, x in enumerate(row):
            flat.append(_require_int(x, f"{location}[{i}][{j}]"))
    return Matrix(fieldspec, rows, cols, flat)


def parse(text: str) -> Document:
    """Parse and validate a document; diagnostics carry the offending field."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    raw = _require_obj(raw, "document")
    version = _require_int(raw.get("format"), "format")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {version}", "format")
    p = _require_int(raw.get("p"), "p")
    fieldspec = FieldSpec(p)

    qraw = _require_obj(raw.get("quiver"), "quiver")
    vertex_count = _require_int(qraw.get("vertex_count"), "quiver.vertex_count")
    arrows = []
    for i, araw in enumerate(_require_list(qraw.get("arrows", []), "quiver.arrows")):
        araw = _require_obj(araw, f"quiver.arrows[{i}]")
        label = araw.get("label")
        if not isinstance(label, str) or not label:
            raise DocumentError("arrow label must be a nonempty string",
                                f"quiver.arrows[{i}].label")
        src = _require_int(araw.get("source"), f"quiver.arrows[{i}].source")
        tgt = _require_int(araw.get("target"), f"quiver.arrows[{i}].target")
        arrows.append(Arrow(src, tgt, label))
    try:
        quiver = Quiver(vertex_count, tuple(arrows))
    except ValueError as exc:
        raise DocumentError(str(exc), "quiver")
    algebra = build_algebra(quiver, fieldspec)  # CyclicQuiverError propagates

    doc = Document(algebra)
    for name, rraw in sorted(_require_obj(raw.get("representations", {}),
                                          "representations").items()):
        loc = f"representations.{name}"
        rraw = _require_obj(rraw, loc)
        dims_raw = _require_list(rraw.get("dims"), f"{loc}.dims")
        if len(dims_raw) != vertex_count:
            raise ShapeError(f"expected {vertex_count} dims", f"{loc}.dims")
        dims = [_require_int(d, f"{loc}.dims[{v}]") for v, d in enumerate(dims_raw)]
        if any(d < 0 for d in dims):
            raise ShapeError("dims must be nonnegative", f"{loc}.dims")
        maps_raw = _require_obj(rraw.get("arrows", {}), f"{loc}.arrows")
        labels = {a.label for a in arrows}
        if set(maps_raw) != labels:
            raise ShapeError(
                f"arrow matrices {sorted(maps_raw)} do not match quiver labels "
                f"{sorted(labels)}", f"{loc}.arrows")
        maps = []
        for i, a in enumerate(quiver.arrows):
            maps.append(_parse_matrix(maps_raw[a.label], dims[a.target],
                                      dims[a.source], fieldspec,
                                      f"{loc}.arrows.{a.label}"))
        doc.representations[name] = Representation(algebra, dims, maps)

    for name, mraw in sorted(_require_obj(raw.get("morphisms", {}),
                                          "morphisms").items()):
        loc = f"morphisms.{name}"
        mraw = _require_obj(mraw, loc)
        src_name = mraw.get("source")
        tgt_name = mraw.get("target")
        for nm, role in ((src_name, "source"), (tgt_name, "target")):
            if not isinstance(nm, str) or nm not in doc.representations:
                raise DocumentError(f"unknown representation {nm!r}",
                                    f"{loc}.{role}")
        src = doc.representations[src_name]
        tgt = doc.representations[tgt_name]
        maps_raw = _require_list(mraw.get("maps"), f"{loc}.maps")
        if len(maps_raw) != vertex_count:
            raise ShapeError(f"expected {vertex_count} vertex maps", f"{loc}.maps")
        maps = [
            _parse_matrix(maps_raw[v], tgt.dims[v], src.dims[v], fieldspec,
                          f"{loc}.maps[{v}]")
            for v in range(vertex_count)
        ]
        try:
            doc.morphisms[name] = Morphism(src, tgt, maps)
        except NonCommutingMorphismError as exc:
            raise NonCommutingMorphismError(f"{loc}: {exc}")
    return doc


def to_payload(doc: Document) -> dict:
    reps = {}
    for name, r in doc.representations.items():
        reps[name] = {
            "dims": list(r.dims),
            "arrows": {a.label: r.arrow_maps[i].to_lists()
                       for i, a in enumerate(doc.quiver.arrows)},
        }
    morphs = {}
    for name, m in doc.morphisms.items():
        morphs[name] = {
            "source": doc._name_of(m.source),
            "target": doc._name_of(m.target),
            "maps": [vm.to_lists() for vm in m.vertex_maps],
        }
    return {
        "format": FORMAT_VERSION,
        "p": doc.fieldspec.p,
        "quiver": {
            "vertex_count": doc.quiver.vertex_count,
            "arrows": [{"label": a.label, "source": a.source, "target": a.target}
                       for a in doc.quiver.arrows],
        },
        "representations": reps,
        "morphisms": morphs,
    }


def serialize(doc: Document) -> str:
    """Canonical form: sorted keys, two-space indent, LF, trailing newline."""
    return json.dumps(to_payload(doc), sort_keys=True, indent=2) + "\n"
