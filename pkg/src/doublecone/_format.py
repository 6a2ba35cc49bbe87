"""Locale-independent number formatting and CSV/JSON emission."""
from __future__ import annotations

import io
import json
import math


def _plain(x):
    return x.item() if type(x).__module__ == "numpy" else x


def fmt(x) -> str:
    """12 significant digits; scientific notation outside 1e-4 <= |x| < 1e6."""
    x = _plain(x)
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if x == 0:
        return "0"
    if not math.isfinite(x):
        return repr(x)
    if 1e-4 <= abs(x) < 1e6:
        return f"{x:.12g}"
    return f"{x:.11e}"


def to_csv(header, rows) -> str:
    out = io.StringIO()
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in row) + "\n")
    return out.getvalue()


def _jsonable(obj):
    obj = _plain(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    return float(fmt(obj))


def to_json(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2, sort_keys=True) + "\n"
