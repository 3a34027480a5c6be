"""Reading algebra presentations from JSON and shipped fixtures."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .algebra import Algebra, AlgebraError, AlgebraPresentation, Arrow, Quiver, algebra_from_presentation

FIXTURES = ("e0", "e1", "e2", "e3", "e4", "nakayama_a3_e2")


class SchemaError(ValueError):
    """Input does not match the presentation schema (CLI exit code 2)."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def _coeff(raw) -> Fraction | int:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise SchemaError(f"coefficient {raw!r} must be an integer or an 'n/d' string")
    if isinstance(raw, int):
        return raw
    _require(isinstance(raw, str), f"coefficient {raw!r} must be an 'n/d' string")
    try:
        c = Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad coefficient {raw!r}") from exc
    return int(c) if c.denominator == 1 else c


def presentation_from_dict(data) -> AlgebraPresentation:
    _require(isinstance(data, dict), "top level must be an object")
    extra = set(data) - {"vertices", "arrows", "relations", "name"}
    _require(not extra, f"unknown keys {sorted(extra)}")
    verts = data.get("vertices")
    _require(isinstance(verts, list) and verts, "'vertices' must be a nonempty list")
    _require(all(isinstance(v, str) for v in verts), "vertex labels must be strings")
    arrows = data.get("arrows", [])
    _require(isinstance(arrows, list), "'arrows' must be a list")
    parsed = []
    for a in arrows:
        _require(isinstance(a, dict) and set(a) == {"name", "from", "to"}, f"bad arrow entry {a!r}")
        _require(all(isinstance(a[k], str) for k in a), f"arrow fields must be strings in {a!r}")
        parsed.append(Arrow(a["name"], a["from"], a["to"]))
    names = {a.name for a in parsed}
    rels = data.get("relations", [])
    _require(isinstance(rels, list), "'relations' must be a list")
    out = []
    for rel in rels:
        _require(isinstance(rel, list) and rel, "each relation must be a nonempty list of terms")
        terms = []
        for t in rel:
            _require(isinstance(t, dict) and set(t) == {"coeff", "path"}, f"bad relation term {t!r}")
            path = t["path"]
            _require(isinstance(path, list) and all(isinstance(p, str) for p in path), f"bad path {path!r}")
            _require(len(path) >= 2, f"relation path {path} has length < 2")
            for p in path:
                _require(p in names, f"unknown arrow {p!r} in relation")
            terms.append((_coeff(t["coeff"]), tuple(path)))
        out.append(tuple(terms))
    try:
        return AlgebraPresentation(Quiver(tuple(verts), tuple(parsed)), tuple(out))
    except AlgebraError as exc:
        raise SchemaError(str(exc)) from exc


def parse_presentation(path) -> AlgebraPresentation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc.msg})") from exc
    return presentation_from_dict(data)


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise KeyError(name)
    return Path(str(resources.files("alk.fixtures").joinpath(f"{name}.json")))


def load_fixture(name: str) -> Algebra:
    pres = parse_presentation(fixture_path(name))
    return algebra_from_presentation(pres, name=name.upper() if name != "nakayama_a3_e2" else name)


def load_algebra(path) -> Algebra:
    pres = parse_presentation(path)
    return algebra_from_presentation(pres, name=Path(path).stem)
