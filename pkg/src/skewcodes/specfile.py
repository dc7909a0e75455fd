"""Code spec files: canonical JSON documents mirroring CodeSpec.

The document carries the field parameters (kind/p/s/r/gamma or
kind/p/derivation), the representatives and witness tuples as element
strings, and the dimension k. Rendering is canonical (sorted keys,
two-space indent, trailing newline), so parse/render round-trips are
byte-identical.
"""

from __future__ import annotations

import json

from .codes import CodeSpec
from .fields import Field, FiniteField, RationalFunctionField, make_field


class SpecFileError(ValueError):
    """Malformed spec file; message carries position or key context."""


def render(spec: CodeSpec) -> str:
    field = spec.field
    fmt = field.format_element
    doc: dict = {"kind": field.kind, "p": field.p, "k": spec.k}
    if isinstance(field, FiniteField):
        doc["s"] = field.s
        doc["r"] = field.r
        doc["gamma"] = None if field.gamma == field.zero else fmt(field.gamma)
    else:
        doc["derivation"] = field.derivation
    doc["reps"] = [fmt(a) for a in spec.reps]
    doc["betas"] = [[fmt(b) for b in block] for block in spec.betas]
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _require(doc: dict, key: str, types) -> object:
    if key not in doc:
        raise SpecFileError(f"missing required key {key!r}")
    value = doc[key]
    if not isinstance(value, types):
        raise SpecFileError(f"key {key!r} has the wrong type: {value!r}")
    return value


def parse(text: str) -> CodeSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SpecFileError("spec file must contain a JSON object")
    kind = _require(doc, "kind", str)
    p = _require(doc, "p", int)
    k = _require(doc, "k", int)
    if kind == "finite":
        field: Field = make_field(
            "finite",
            p,
            s=_require(doc, "s", int),
            r=_require(doc, "r", int),
            gamma=doc.get("gamma"),
        )
    elif kind == "rational":
        field = RationalFunctionField(p, derivation=bool(_require(doc, "derivation", bool)))
    else:
        raise SpecFileError(f"unknown field kind {kind!r}")
    raw_reps = _require(doc, "reps", list)
    raw_betas = _require(doc, "betas", list)
    try:
        reps = [field.parse_element(s) for s in raw_reps]
        betas = [[field.parse_element(s) for s in block] for block in raw_betas]
    except (ValueError, TypeError) as exc:
        raise SpecFileError(f"bad element string in reps/betas: {exc}") from None
    return CodeSpec(field, reps, betas, k)


def load(path: str) -> CodeSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def save(path: str, spec: CodeSpec) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(spec))
