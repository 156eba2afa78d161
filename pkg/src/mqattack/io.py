"""Reading and writing equation systems as JSON."""
from __future__ import annotations

import json
from pathlib import Path

from .boolpoly import BooleanSystem
from .lift import IntSystem


def system_from_json_obj(obj: dict) -> BooleanSystem | IntSystem:
    """Boolean systems list monomials as index lists; integer systems list [coef, [[var, exp], ...]]."""
    if not isinstance(obj, dict) or "variables" not in obj or "polynomials" not in obj:
        raise ValueError("system JSON needs 'variables' and 'polynomials'")
    fmt = obj.get("format")
    if fmt is None:
        fmt = "boolean"
        for p in obj["polynomials"]:
            if p:
                first = p[0]
                if len(first) == 2 and isinstance(first[0], int) and isinstance(first[1], list):
                    fmt = "integer"
                break
    if fmt == "integer":
        return IntSystem.from_json_obj(obj)
    if fmt == "boolean":
        return BooleanSystem.from_json_obj(obj)
    raise ValueError(f"unknown system format {fmt!r}")


def read_system(path) -> BooleanSystem | IntSystem:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from None
    return system_from_json_obj(obj)


def dumps(obj) -> str:
    """One top-level key per line, values compact."""
    obj = round_floats(obj)
    if not isinstance(obj, dict) or not obj:
        return json.dumps(obj) + "\n"
    body = ",\n".join(f" {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))}"
                       for k, v in obj.items())
    return "{\n" + body + "\n}\n"


def write_json(obj, path) -> None:
    Path(path).write_text(dumps(obj))


def round_floats(obj, digits: int = 6):
    """Floats rounded to a fixed number of decimals, for stable output files."""
    if isinstance(obj, float):
        return float(f"{obj:.{digits}f}")
    if isinstance(obj, dict):
        return {k: round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, digits) for v in obj]
    return obj
