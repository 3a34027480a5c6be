"""Canonical JSON and DOT output."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import Quiver
from .homology import DimensionReading

METHOD = (
    "finite deterministic sampling over a generated corpus; "
    "a pass is evidence on the sampled modules, not a proof"
)


class OutputError(OSError):
    pass


def _plain(obj):
    if isinstance(obj, DimensionReading):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "to_json"):
        return _plain(obj.to_json())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def canonical_json(obj) -> str:
    return json.dumps(_plain(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror}") from exc


def reports_document(reports, caps: dict | None = None, notes: list[str] | None = None) -> dict:
    return {
        "tool": "alk",
        "method": METHOD,
        "caps": dict(caps or {}),
        "notes": list(notes or []),
        "suites": [r.to_json() if hasattr(r, "to_json") else r for r in reports],
    }


def report_emit(reports, path, caps: dict | None = None, notes: list[str] | None = None) -> str:
    text = canonical_json(reports_document(reports, caps, notes))
    if path is not None:
        write_text(path, text)
    return text


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_string(quiver: Quiver, title: str = "Q") -> str:
    lines = [f"digraph {_quote(title)} {{", "  rankdir=LR;"]
    for v in quiver.vertices:
        lines.append(f"  {_quote(v)} [label={_quote(v)}];")
    for a in quiver.arrows:
        lines.append(f"  {_quote(a.source)} -> {_quote(a.target)} [label={_quote(a.name)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_export(quiver: Quiver, path, title: str = "Q") -> str:
    text = dot_string(quiver, title)
    if path is not None:
        write_text(path, text)
    return text
