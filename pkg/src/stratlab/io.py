"""JSON interchange for crystal and mod-p modules.

Crystal files follow::

    {"p": 3, "q": 5, "signature": [3, 2], "A_F": [[...]], "A_V": [[...]],
     "B": [[...]], "M1": [1, 2, 3, 4, 5], "M2": [6, 7, 8, 9, 10]}

Mod-p files carry ``"kind": "modp"`` and matrices ``F``/``V`` (plus
optional ``field_degree``, ``pairing``, ``M1``/``M2``). Over F_{p^2} an
entry may be a coefficient pair ``[a, b]``. Basis indices are 1-based and
matrices are row-major with columns indexed by the basis.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from .crystal import CrystalModule, verify_axioms
from .errors import InvariantViolation, ParseError, SchemaViolation, StratlabError
from .modp import ModPModule

__all__ = [
    "load_module",
    "parse_module",
    "module_to_json",
    "dumps_module",
    "fixture_path",
    "fraction_to_str",
    "CRYSTAL_SCHEMA",
    "MODP_SCHEMA",
]

_int_matrix = {"type": "array", "minItems": 1, "items": {"type": "array", "items": {"type": "integer"}}}
_entry = {"oneOf": [
    {"type": "integer"},
    {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
]}
_field_matrix = {"type": "array", "minItems": 1, "items": {"type": "array", "items": _entry}}
_index_list = {"type": "array", "items": {"type": "integer", "minimum": 1}}
_names = {"type": "array", "items": {"type": "string"}}
_signature = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}

CRYSTAL_SCHEMA = {
    "type": "object",
    "required": ["p", "A_F", "A_V"],
    "additionalProperties": False,
    "properties": {
        "kind": {"const": "crystal"},
        "p": {"type": "integer", "minimum": 2},
        "q": {"type": "integer", "minimum": 1},
        "signature": _signature,
        "A_F": _int_matrix,
        "A_V": _int_matrix,
        "B": _int_matrix,
        "M1": _index_list,
        "M2": _index_list,
        "basis": _names,
    },
    "dependentRequired": {"M1": ["M2"], "M2": ["M1"]},
}

MODP_SCHEMA = {
    "type": "object",
    "required": ["kind", "p", "F", "V"],
    "additionalProperties": False,
    "properties": {
        "kind": {"const": "modp"},
        "p": {"type": "integer", "minimum": 2},
        "field_degree": {"enum": [1, 2]},
        "signature": _signature,
        "F": _field_matrix,
        "V": _field_matrix,
        "pairing": _field_matrix,
        "M1": _index_list,
        "M2": _index_list,
        "basis": _names,
    },
    "dependentRequired": {"M1": ["M2"], "M2": ["M1"]},
}

# JSON path of the field most responsible for each crystal condition
_CONDITION_PATH = {1: "$.A_F", 2: "$.M1", 3: "$.A_V", 4: "$.B", 5: "$.signature", 6: "$.A_F", 7: "$.B"}


def fraction_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture such as ``table1_p3.json``."""
    return Path(str(resources.files("stratlab") / "data" / name))


def _validate(data, schema):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise SchemaViolation(err.json_path, err.message)


def _square(data, keys, n=None):
    for key in keys:
        if key not in data:
            continue
        A = data[key]
        n = len(A) if n is None else n
        widths = {len(row) for row in A}
        if len(widths) == 1 and widths != {n}:
            raise SchemaViolation(f"$.{key}", f"{len(A)}x{widths.pop()} matrix, expected {n}x{n}")
        if len(A) != n:
            raise SchemaViolation(f"$.{key}", f"expected {n} rows, got {len(A)}")
        for i, row in enumerate(A):
            if len(row) != n:
                raise SchemaViolation(f"$.{key}[{i}]", f"expected {n} entries, got {len(row)}")
    return n


def parse_module(data, check: bool = True):
    """Build a module from decoded JSON. With ``check`` every invariant is enforced."""
    if not isinstance(data, dict):
        raise SchemaViolation("$", "top level must be an object")
    if data.get("kind") == "modp":
        return _parse_modp(data, check)
    return _parse_crystal(data, check)


def _splitting(data):
    if "M1" in data:
        return (tuple(data["M1"]), tuple(data["M2"]))
    return None


def _parse_crystal(data, check):
    _validate(data, CRYSTAL_SCHEMA)
    n = _square(data, ["A_F", "A_V", "B"])
    if n % 2:
        raise SchemaViolation("$.A_F", f"rank {n} is odd")
    if "q" in data and data["q"] * 2 != n:
        raise SchemaViolation("$.q", f"q = {data['q']} does not match rank {n}")
    if "basis" in data and len(data["basis"]) != n:
        raise SchemaViolation("$.basis", f"expected {n} names")
    try:
        m = CrystalModule(
            p=data["p"],
            A_F=data["A_F"],
            A_V=data["A_V"],
            B=data.get("B"),
            splitting=_splitting(data),
            signature=tuple(data["signature"]) if "signature" in data else None,
            basis_names=tuple(data["basis"]) if "basis" in data else None,
        )
    except StratlabError:
        raise
    except ValueError as exc:
        raise InvariantViolation(type(exc).__name__, str(exc), "$.p") from exc
    if check:
        report = verify_axioms(m)
        for c in report.failures():
            raise InvariantViolation(f"condition ({c.number}) {c.name}", c.detail, _CONDITION_PATH[c.number])
    return m


def _parse_modp(data, check):
    _validate(data, MODP_SCHEMA)
    _square(data, ["F", "V", "pairing"])
    if "basis" in data and len(data["basis"]) != len(data["F"]):
        raise SchemaViolation("$.basis", f"expected {len(data['F'])} names")
    try:
        m = ModPModule(
            data["p"],
            data["F"],
            data["V"],
            field_degree=data.get("field_degree", 1),
            splitting=_splitting(data),
            pairing=data.get("pairing"),
            signature=tuple(data["signature"]) if "signature" in data else None,
            basis_names=tuple(data["basis"]) if "basis" in data else None,
            check=check,
        )
    except StratlabError:
        raise
    except ValueError as exc:
        raise InvariantViolation(type(exc).__name__, str(exc), "$") from exc
    return m


def load_module(path, check: bool = True):
    """Read a module file; raises ParseError, SchemaViolation or InvariantViolation."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    return parse_module(data, check=check)


def module_to_json(m) -> dict:
    if isinstance(m, CrystalModule):
        out = {"p": m.p, "q": m.q}
        if m.signature is not None:
            out["signature"] = list(m.signature)
        out["A_F"] = [list(r) for r in m.A_F]
        out["A_V"] = [list(r) for r in m.A_V]
        if m.B is not None:
            out["B"] = [list(r) for r in m.B]
        if m.splitting is not None:
            out["M1"], out["M2"] = list(m.splitting[0]), list(m.splitting[1])
        out["basis"] = list(m.basis_names)
        return out
    K = m.field
    out = {"kind": "modp", "p": m.p, "field_degree": m.field_degree}
    if m.signature is not None:
        out["signature"] = list(m.signature)
    out["F"] = [[K.export(x) for x in r] for r in m.F_matrix]
    out["V"] = [[K.export(x) for x in r] for r in m.V_matrix]
    if m.pairing is not None:
        out["pairing"] = [[K.export(x) for x in r] for r in m.pairing]
    if m.splitting is not None:
        out["M1"], out["M2"] = list(m.splitting[0]), list(m.splitting[1])
    out["basis"] = list(m.basis_names)
    return out


def dumps_module(m) -> str:
    """Deterministic text with one matrix row per line."""
    data = module_to_json(m)
    lines = ["{"]
    items = list(data.items())
    for k, (key, value) in enumerate(items):
        comma = "," if k < len(items) - 1 else ""
        if isinstance(value, list) and value and isinstance(value[0], list) and key not in ("M1", "M2"):
            rows = ",\n".join("    " + json.dumps(r) for r in value)
            lines.append(f'  "{key}": [\n{rows}\n  ]{comma}')
        else:
            lines.append(f'  "{key}": {json.dumps(value)}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"
