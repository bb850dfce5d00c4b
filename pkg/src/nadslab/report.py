"""Certificates and the machine-readable report schema.

Every checker returns a ``Certificate``.  Its JSON form is the structured
report the CLI writes: ``{version, claim, parameters, verdict, witnesses,
checked_items, notes}``.  Sub-certificates nest inside ``checked_items`` as
``{"check": ..., "ok": ..., "certificate": {...}}``.  No floats appear; exact
rationals are strings ``"p/q"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

REPORT_VERSION = "nadslab-report/1"
PASS = "pass"
FALSIFIED = "falsified"

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$ref": "#/$defs/certificate",
    "$defs": {
        "certificate": {
            "type": "object",
            "required": ["version", "claim", "parameters", "verdict", "witnesses", "checked_items"],
            "additionalProperties": False,
            "properties": {
                "version": {"const": REPORT_VERSION},
                "claim": {"type": "string"},
                "parameters": {"type": "object"},
                "verdict": {"enum": [PASS, FALSIFIED]},
                "witnesses": {"type": "array"},
                "checked_items": {"type": "array", "items": {"$ref": "#/$defs/item"}},
                "notes": {"type": "array", "items": {"type": "string"}},
            },
        },
        "item": {
            "type": "object",
            "required": ["check", "ok"],
            "properties": {
                "check": {"type": "string"},
                "ok": {"type": "boolean"},
                "certificate": {"$ref": "#/$defs/certificate"},
            },
        },
    },
}


def _plain(value):
    if isinstance(value, Certificate):
        return value.to_dict()
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    # Points, words, cylinders, schedules serialize through str()
    return str(value)


@dataclass(frozen=True)
class Certificate:
    claim: str
    parameters: dict
    verdict: str
    witnesses: tuple = ()
    checked_items: tuple = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.verdict not in (PASS, FALSIFIED):
            raise ValueError(f"bad verdict {self.verdict!r}")
        object.__setattr__(self, "witnesses", tuple(self.witnesses))
        object.__setattr__(self, "checked_items", tuple(self.checked_items))
        object.__setattr__(self, "notes", tuple(self.notes))

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        out = {
            "version": REPORT_VERSION,
            "claim": self.claim,
            "parameters": _plain(self.parameters),
            "verdict": self.verdict,
            "witnesses": _plain(list(self.witnesses)),
            "checked_items": _plain(list(self.checked_items)),
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def verdict(ok: bool) -> str:
    return PASS if ok else FALSIFIED


def sub_item(cert: Certificate, check: str | None = None) -> dict:
    """Embed a sub-certificate as a checked item."""
    return {"check": check or cert.claim, "ok": cert.passed, "certificate": cert}


def combine(claim: str, parameters: dict, items: list[dict], witnesses=(), notes=()) -> Certificate:
    """Certificate that passes iff every item passed."""
    ok = all(item["ok"] for item in items)
    return Certificate(claim, parameters, verdict(ok), witnesses, items, notes)


def validate(report: dict) -> None:
    """Raise jsonschema.ValidationError if ``report`` does not match the schema."""
    import jsonschema

    jsonschema.validate(report, REPORT_SCHEMA)


def render_text(cert: Certificate | dict, indent: int = 0) -> str:
    """Human-readable rendering derived from the structured form."""
    d = cert.to_dict() if isinstance(cert, Certificate) else cert
    pad = "  " * indent
    mark = "PASS" if d["verdict"] == PASS else "FALSIFIED"
    params = ", ".join(f"{k}={v}" for k, v in sorted(d["parameters"].items()))
    lines = [f"{pad}[{mark}] {d['claim']}" + (f" ({params})" if params else "")]
    for note in d.get("notes", []):
        lines.append(f"{pad}  note: {note}")
    for w in d["witnesses"]:
        lines.append(f"{pad}  witness: {json.dumps(w, sort_keys=True, ensure_ascii=False)}")
    for item in d["checked_items"]:
        if "certificate" in item:
            lines.append(render_text(item["certificate"], indent + 1))
        else:
            status = "ok" if item["ok"] else "FAIL"
            extra = {k: v for k, v in item.items() if k not in ("check", "ok")}
            detail = f" {json.dumps(extra, sort_keys=True, ensure_ascii=False)}" if extra else ""
            lines.append(f"{pad}  - {status}: {item['check']}{detail}")
    return "\n".join(lines)
