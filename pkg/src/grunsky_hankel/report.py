"""JSON/CSV report encoding shared by the command-line subcommands."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, is_dataclass
from importlib import resources

import numpy as np

SCHEMA_VERSION = "1.0"


def cplx(z) -> dict:
    z = complex(z)
    return {"re": _num(z.real), "im": _num(z.imag)}


def _num(x: float):
    x = float(x)
    return x if math.isfinite(x) else None


def jsonable(obj):
    """Recursively convert numpy/complex/dataclass values into plain JSON types.

    Complex numbers become ``{"re", "im"}`` pairs and non-finite floats
    become ``null``.
    """
    if is_dataclass(obj) and not isinstance(obj, type):
        if hasattr(obj, "to_dict"):
            return jsonable(obj.to_dict())
        return jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return cplx(obj)
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if obj is None or isinstance(obj, str):
        return obj
    if hasattr(obj, "value") and isinstance(obj.value, str):  # enums
        return obj.value
    return str(obj)


def make_report(command: str, inputs: dict, results: dict, timings: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": jsonable(inputs),
        "results": jsonable(results),
        "timings": jsonable(timings),
    }


def flatten(obj, prefix: str = "") -> list:
    """``(path, value)`` rows for every leaf; list items are addressed by index."""
    rows = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            rows.extend(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            rows.extend(flatten(v, f"{prefix}[{i}]"))
    else:
        rows.append((prefix, obj))
    return rows


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["path", "value"])
    for path, v in flatten(report):
        w.writerow([path, _fmt(v)])
    return buf.getvalue()


def load_schema() -> dict:
    text = resources.files("grunsky_hankel").joinpath("schema/report.schema.json").read_text()
    return json.loads(text)
