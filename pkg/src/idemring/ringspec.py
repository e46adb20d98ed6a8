"""Ring specification JSON: schema validation and construction.

Examples::

    {"type": "matrix_algebra", "field": {"p": 2, "m": 1}, "size": 2}
    {"type": "zn", "n": 6}
    {"type": "product", "factors": [{"type": "zn", "n": 2}, {"type": "zn", "n": 3}]}
"""
from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .errors import InputError, SpecError
from .field import make_field
from .rings import (
    Ring,
    build_field_algebra,
    build_group_algebra,
    build_matrix_algebra,
    build_product,
    build_structure_constants,
    build_upper_triangular,
    build_zn,
    build_zn_matrix,
)

_INT = {"type": "integer"}
_POS = {"type": "integer", "minimum": 1}
_FIELD = {
    "type": "object",
    "properties": {"p": _POS, "m": _POS, "modulus": {"type": "array", "items": _INT}},
    "required": ["p"],
    "additionalProperties": False,
}


def _variant(props, required):
    props = {"type": {"type": "string"}, **props}
    return {"type": "object", "properties": props, "required": ["type", *required], "additionalProperties": False}


SCHEMAS = {
    "matrix_algebra": _variant({"field": _FIELD, "size": _POS}, ["field", "size"]),
    "upper_triangular": _variant({"field": _FIELD, "size": _POS}, ["field", "size"]),
    "group_algebra": _variant({"field": _FIELD, "cayley": {"type": "array", "items": {"type": "array", "items": _INT}}},
                              ["field", "cayley"]),
    "zn": _variant({"n": _INT}, ["n"]),
    "zn_matrix": _variant({"n": _INT, "size": _POS}, ["n", "size"]),
    "structure_constants": _variant(
        {"field": _FIELD, "dim": _POS,
         "table": {"type": "array", "items": {"type": "array", "items": {"type": "array", "items": _INT}}},
         "unit": {"type": "array", "items": _INT},
         "name": {"type": "string"}},
        ["field", "dim", "table", "unit"]),
    "product": _variant({"factors": {"type": "array", "items": {"type": "object"}, "minItems": 1}}, ["factors"]),
    "field": _variant({"field": _FIELD}, ["field"]),
}


def validate_spec(spec, path="$"):
    """Validate a spec (recursively for products); raise SpecError on failure."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise SpecError(f"{path}: ring spec must be an object with a 'type' key")
    kind = spec["type"]
    if kind not in SCHEMAS:
        raise SpecError(f"{path}: unknown ring type {kind!r}; expected one of {sorted(SCHEMAS)}")
    try:
        jsonschema.validate(spec, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path)
        raise SpecError(f"{path}{'/' + where if where else ''}: {exc.message}") from None
    if kind == "product":
        for i, f in enumerate(spec["factors"]):
            validate_spec(f, f"{path}/factors/{i}")


def _field(d):
    return make_field(d["p"], d.get("m", 1), d.get("modulus"))


def build_ring(spec, bound=None, check=True) -> Ring:
    """Construct the ring described by a (validated) spec dictionary.

    ``check=False`` skips the axiom check for structure-constant input so a
    broken table can still be inspected by ``verify_ring_axioms``.
    """
    validate_spec(spec)
    kind = spec["type"]
    if kind == "matrix_algebra":
        return build_matrix_algebra(_field(spec["field"]), spec["size"], bound)
    if kind == "upper_triangular":
        return build_upper_triangular(_field(spec["field"]), spec["size"], bound)
    if kind == "group_algebra":
        return build_group_algebra(_field(spec["field"]), spec["cayley"], bound=bound)
    if kind == "zn":
        return build_zn(spec["n"], bound)
    if kind == "zn_matrix":
        return build_zn_matrix(spec["n"], spec["size"], bound)
    if kind == "field":
        return build_field_algebra(_field(spec["field"]))
    if kind == "structure_constants":
        F = _field(spec["field"])
        n = spec["dim"]
        table, unit = spec["table"], spec["unit"]
        if len(table) != n or any(len(r) != n or any(len(c) != n for c in r) for r in table) or len(unit) != n:
            raise SpecError(f"structure constants must be {n}x{n}x{n} with a length-{n} unit")
        return build_structure_constants(F, table, unit, spec.get("name"), bound=bound, check=check)
    if kind == "product":
        return build_product([build_ring(f, bound, check) for f in spec["factors"]], bound)
    raise AssertionError(kind)


def load_spec(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: malformed JSON: {exc}") from None
    validate_spec(spec)
    return spec
