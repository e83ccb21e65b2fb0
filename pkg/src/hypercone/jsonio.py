"""JSON encoding of reports and loaders for pencil and form files.

Dataclasses become objects whose keys follow field declaration order;
enums become their values; rationals become ``"p/q"`` strings; Gaussian
rationals and polynomials become text in the polynomial grammar.  Array
fields (raster labels) are dropped.
"""

from __future__ import annotations

import dataclasses
import json
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import CQ, MPoly
from .arrangement import LinearFormSet
from .improj.pencil import HermitianPencil
from .polytext import parse_poly, parse_rationals

__all__ = ["dumps", "load_forms", "load_pencil", "to_jsonable"]


def to_jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return round(obj, 12)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, CQ):
        return obj.to_text()
    if isinstance(obj, MPoly):
        return obj.to_text()
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return round(float(obj), 12)
    if isinstance(obj, HermitianPencil):
        return [[[x.to_text() for x in row] for row in m] for m in obj.mats]
    if isinstance(obj, LinearFormSet):
        return [[str(x) for x in a] for a in obj.forms]
    if dataclasses.is_dataclass(obj):
        out = {}
        for f in dataclasses.fields(obj):
            if f.name.startswith("_") or not f.repr:
                continue
            v = getattr(obj, f.name)
            if isinstance(v, np.ndarray):
                continue
            out[f.name] = to_jsonable(v)
        return out
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__} as JSON")


def dumps(obj: Any, **extra) -> str:
    """Deterministic JSON text; ``extra`` keys are appended after the object's own."""
    data = to_jsonable(obj)
    if extra:
        data = {**data, **to_jsonable(extra)}
    return json.dumps(data, indent=2, ensure_ascii=False)


def _read(arg: str) -> str:
    return Path(arg[1:]).read_text() if arg.startswith("@") else arg


def _scalar(x) -> CQ:
    if isinstance(x, (int, float)):
        return CQ(Fraction(x).limit_denominator(10**12) if isinstance(x, float) else x)
    p = parse_poly(str(x), 1)
    if not p.is_constant():
        raise ValueError(f"pencil entry {x!r} is not a constant")
    return p.constant_term()


def load_pencil(arg: str) -> HermitianPencil:
    """A JSON list of matrices; entries are numbers or strings such as ``"1-2i"``."""
    data = json.loads(_read(arg))
    return HermitianPencil([[[_scalar(x) for x in row] for row in m] for m in data])


def load_forms(arg: str) -> LinearFormSet:
    """Forms as a JSON list of coefficient lists, or one comma-separated row per line."""
    text = _read(arg).strip()
    if text.startswith("["):
        rows = [[Fraction(str(x)) for x in row] for row in json.loads(text)]
    else:
        rows = [list(parse_rationals(line)) for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not rows:
        raise ValueError("no linear forms given")
    return LinearFormSet(len(rows[0]), rows)
