"""JSON file format for configurations and distance matrices (``format: 1``)."""
from __future__ import annotations

import json
from pathlib import Path

from .exactnum import ContractError, render
from .geometry import Configuration, DistanceMatrix

FORMAT_VERSION = 1

__all__ = ["ConfigFormatError", "to_dict", "from_dict", "dumps", "loads", "load", "save"]


class ConfigFormatError(ValueError):
    """Malformed configuration file; the message names the offending field."""


def to_dict(obj) -> dict:
    if isinstance(obj, Configuration):
        out = {
            "format": FORMAT_VERSION,
            "type": "configuration",
            "dim": obj.dim,
            "D": obj.D,
            "points": [[render(c) for c in p] for p in obj.points],
        }
        if obj.labels is not None:
            out["labels"] = list(obj.labels)
        return out
    if isinstance(obj, DistanceMatrix):
        return {
            "format": FORMAT_VERSION,
            "type": "distance_matrix",
            "D": obj.D,
            "sq": [[render(v) for v in row] for row in obj.sq],
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _require(data: dict, key: str):
    if key not in data:
        raise ConfigFormatError(f"missing field {key!r}")
    return data[key]


def from_dict(data) -> Configuration | DistanceMatrix:
    if not isinstance(data, dict):
        raise ConfigFormatError("top level must be a JSON object")
    fmt = data.get("format", FORMAT_VERSION)
    if fmt != FORMAT_VERSION:
        raise ConfigFormatError(f"field 'format': unsupported version {fmt!r}")
    kind = data.get("type", "configuration")
    D = _require(data, "D")
    if not isinstance(D, int) or isinstance(D, bool):
        raise ConfigFormatError("field 'D': must be an integer")
    try:
        if kind == "configuration":
            dim = _require(data, "dim")
            if not isinstance(dim, int) or isinstance(dim, bool):
                raise ConfigFormatError("field 'dim': must be an integer")
            points = _require(data, "points")
            if not isinstance(points, list):
                raise ConfigFormatError("field 'points': must be a list")
            for k, p in enumerate(points):
                if not isinstance(p, list) or not all(isinstance(c, (str, int)) for c in p):
                    raise ConfigFormatError(f"field 'points[{k}]': must be a list of exact numbers")
            return Configuration(dim, [[str(c) for c in p] for p in points], D, data.get("labels"))
        if kind == "distance_matrix":
            sq = _require(data, "sq")
            if not isinstance(sq, list) or not all(isinstance(r, list) for r in sq):
                raise ConfigFormatError("field 'sq': must be a list of rows")
            return DistanceMatrix([[str(v) for v in row] for row in sq], D)
    except ConfigFormatError:
        raise
    except (ContractError, ValueError) as exc:
        raise ConfigFormatError(f"invalid {kind}: {exc}") from exc
    raise ConfigFormatError(f"field 'type': unknown value {kind!r}")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), indent=2) + "\n"


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return from_dict(data)


def load(path):
    return loads(Path(path).read_text())


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj))
