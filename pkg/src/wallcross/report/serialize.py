"""Canonical JSON emission and the matching loaders."""

from __future__ import annotations

import json
from fractions import Fraction

from ..chambers import ChamberPoint, Wall
from ..crossing import CrossingReport, InvariantExpression
from ..lattice import Isometry, LatticeClass


def _default(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_plain(obj):
    """Convert library values into JSON-ready builtins."""
    return json.loads(emit_json(obj))


def emit_json(obj, indent: int | None = None) -> str:
    """Deterministic JSON: sorted keys, compact separators, exact fractions."""
    if isinstance(obj, (list, tuple)) and obj and all(isinstance(w, Wall) for w in obj):
        obj = sorted(obj, key=lambda w: w.key)
    separators = (",", ":") if indent is None else (",", ": ")
    return json.dumps(obj, default=_default, sort_keys=True, separators=separators, indent=indent)


def load_walls(text: str) -> list[Wall]:
    return [Wall.from_json(d) for d in json.loads(text)]


def load_report(text: str) -> CrossingReport:
    return CrossingReport.from_json(json.loads(text))


def load_expression(text: str) -> InvariantExpression:
    return InvariantExpression.from_json(json.loads(text))


def load_point(text: str) -> ChamberPoint:
    return ChamberPoint.from_json(json.loads(text))


def load_isometry(text: str) -> Isometry:
    return Isometry.from_json(json.loads(text))


def load_class(text: str) -> LatticeClass:
    return LatticeClass.from_json(json.loads(text))
