"""JSON measure specs: parsing with field-precise diagnostics, and serialization.

Spec grammar (one JSON object per measure):

    {"type": "atoms", "points": [...], "weights": [...],
     "tail": {"start": N, "kind": "power", "coefficient": c, "exponent": e}?}
    {"type": "density", "pieces": [{"kind": "power", "support": [lo, hi|"inf"],
                                    "coefficient": c, "exponent": e}, ...]}
      (a single piece may be inlined without the "pieces" wrapper)
    {"type": "cantor", "level": m?}
    {"type": "weighted", "base": {...},
     "weight": {"kind": "x_power"|"cdf_power", "exponent": e} | {"kind": "const", "value": c}}
    {"type": "transform", "base": {...},
     "map": "reflect" | {"kind": "shift"|"scale", "value": v}}

Every object accepts an optional "label".
"""

from __future__ import annotations

import json
import math
from typing import Any

from .errors import MeasureError, SpecParseError
from .measures import (
    AtomicMeasure,
    CantorMeasure,
    DensityMeasure,
    Measure,
    PowerLawPiece,
    TailRule,
    TransformedMeasure,
    WeightedMeasure,
    WeightRule,
)


def _endpoint(value: Any, path: str) -> float:
    if value in ("inf", "+inf"):
        return math.inf
    if value == "-inf":
        return -math.inf
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    raise SpecParseError(f"expected a number or 'inf', got {value!r}", path)


def _number(obj: dict, key: str, path: str, default=None) -> float:
    if key not in obj:
        if default is not None:
            return default
        raise SpecParseError(f"missing required field {key!r}", path)
    v = obj[key]
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise SpecParseError(f"field {key!r} must be a number, got {v!r}", path)
    return float(v)


def _parse_tail(obj: dict, path: str) -> TailRule:
    kind = obj.get("kind", "power")
    if kind != "power":
        raise SpecParseError(f"unknown tail kind {kind!r}", path + ".kind")
    start = obj.get("start")
    if not isinstance(start, int) or isinstance(start, bool):
        raise SpecParseError("tail 'start' must be an integer", path + ".start")
    try:
        return TailRule.power(
            start,
            _number(obj, "coefficient", path, default=1.0),
            _number(obj, "exponent", path, default=0.0),
        )
    except MeasureError as exc:
        raise SpecParseError(str(exc), path) from exc


def _parse_piece(obj: dict, path: str) -> PowerLawPiece:
    kind = obj.get("kind", "power")
    if kind != "power":
        raise SpecParseError(f"unknown density kind {kind!r}", path + ".kind")
    support = obj.get("support")
    if not isinstance(support, (list, tuple)) or len(support) != 2:
        raise SpecParseError("'support' must be a [lo, hi] pair", path + ".support")
    lo = _endpoint(support[0], path + ".support[0]")
    hi = _endpoint(support[1], path + ".support[1]")
    try:
        return PowerLawPiece(
            lo=lo,
            hi=hi,
            coefficient=_number(obj, "coefficient", path, default=1.0),
            exponent=_number(obj, "exponent", path, default=0.0),
        )
    except MeasureError as exc:
        raise SpecParseError(str(exc), path) from exc


def _parse_weight(obj: Any, path: str) -> WeightRule:
    if not isinstance(obj, dict):
        raise SpecParseError("'weight' must be an object", path)
    kind = obj.get("kind")
    if kind in ("x_power", "cdf_power"):
        return WeightRule(kind=kind, value=_number(obj, "exponent", path))
    if kind == "const":
        return WeightRule(kind="const", value=_number(obj, "value", path))
    raise SpecParseError(f"unknown weight kind {kind!r}", path + ".kind")


def parse_measure(obj: Any, path: str = "") -> Measure:
    """Build a Measure from a decoded spec object; reject with a field path otherwise."""
    if not isinstance(obj, dict):
        raise SpecParseError("measure spec must be a JSON object", path)
    mtype = obj.get("type")
    label = obj.get("label", "")
    if not isinstance(label, str):
        raise SpecParseError("'label' must be a string", path + ".label")

    if mtype == "atoms":
        points = obj.get("points")
        weights = obj.get("weights")
        if not isinstance(points, list) or not isinstance(weights, list):
            raise SpecParseError("'points' and 'weights' must be lists", path)
        tail = _parse_tail(obj["tail"], path + ".tail") if "tail" in obj else None
        try:
            return AtomicMeasure(
                points=tuple(points), weights=tuple(weights), tail=tail, label=label
            )
        except MeasureError as exc:
            raise SpecParseError(str(exc), path) from exc

    if mtype == "density":
        if "pieces" in obj:
            raw = obj["pieces"]
            if not isinstance(raw, list) or not raw:
                raise SpecParseError("'pieces' must be a nonempty list", path + ".pieces")
            pieces = tuple(
                _parse_piece(p, f"{path}.pieces[{i}]") for i, p in enumerate(raw)
            )
        else:
            pieces = (_parse_piece(obj, path),)
        return DensityMeasure(pieces=pieces, label=label)

    if mtype == "cantor":
        level = obj.get("level", 14)
        if not isinstance(level, int) or isinstance(level, bool) or level < 0:
            raise SpecParseError("'level' must be a nonnegative integer", path + ".level")
        return CantorMeasure(level=level, label=label)

    if mtype == "weighted":
        if "base" not in obj:
            raise SpecParseError("missing 'base'", path)
        base = parse_measure(obj["base"], path + ".base")
        weight = _parse_weight(obj.get("weight"), path + ".weight")
        return WeightedMeasure(base=base, weight=weight, label=label)

    if mtype == "transform":
        if "base" not in obj:
            raise SpecParseError("missing 'base'", path)
        base = parse_measure(obj["base"], path + ".base")
        m = obj.get("map")
        if m == "reflect":
            return TransformedMeasure(base=base, kind="reflect", label=label)
        if isinstance(m, dict) and m.get("kind") in ("shift", "scale"):
            return TransformedMeasure(
                base=base, kind=m["kind"], value=_number(m, "value", path + ".map"), label=label
            )
        raise SpecParseError(f"unknown transform map {m!r}", path + ".map")

    raise SpecParseError(f"unknown measure type {mtype!r}", path + ".type")


def parse_measure_spec(text: str) -> Measure:
    """Parse a JSON measure spec from text."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"invalid JSON: {exc}") from exc
    return parse_measure(obj)


def _endpoint_out(v: float):
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return v


def serialize_measure(m: Measure) -> dict:
    """Inverse of parse_measure for the serializable variants."""
    out: dict = {}
    if isinstance(m, AtomicMeasure):
        out = {"type": "atoms", "points": list(m.points), "weights": list(m.weights)}
        if m.tail is not None:
            # only power tails are spec-expressible
            if m.tail.params and m.tail.params[0] == "power":
                _, coefficient, exponent = m.tail.params
            else:
                w1 = m.tail.weight_at(m.tail.start)
                w2 = m.tail.weight_at(2 * m.tail.start)
                exponent = 0.0 if w1 == w2 else math.log(w2 / w1) / math.log(2.0)
                coefficient = w1 / float(m.tail.start) ** exponent
            out["tail"] = {
                "start": m.tail.start,
                "kind": "power",
                "coefficient": coefficient,
                "exponent": exponent,
            }
    elif isinstance(m, DensityMeasure):
        pieces = []
        for p in m.pieces:
            if not isinstance(p, PowerLawPiece):
                raise MeasureError("generic density pieces are not serializable")
            pieces.append(
                {
                    "kind": "power",
                    "support": [_endpoint_out(p.lo), _endpoint_out(p.hi)],
                    "coefficient": p.coefficient,
                    "exponent": p.exponent,
                }
            )
        out = {"type": "density", "pieces": pieces}
    elif isinstance(m, CantorMeasure):
        out = {"type": "cantor", "level": m.level}
    elif isinstance(m, WeightedMeasure):
        if not isinstance(m.weight, WeightRule):
            raise MeasureError("callable weights are not serializable")
        w: dict = {"kind": m.weight.kind}
        if m.weight.kind == "const":
            w["value"] = m.weight.value
        else:
            w["exponent"] = m.weight.value
        out = {"type": "weighted", "base": serialize_measure(m.base), "weight": w}
    elif isinstance(m, TransformedMeasure):
        mp = "reflect" if m.kind == "reflect" else {"kind": m.kind, "value": m.value}
        out = {"type": "transform", "base": serialize_measure(m.base), "map": mp}
    else:
        raise MeasureError(f"cannot serialize measure of type {type(m).__name__}")
    if m.label:
        out["label"] = m.label
    return out
