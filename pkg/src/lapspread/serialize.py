"""JSON-friendly conversion with stable 12-significant-digit floats."""

from __future__ import annotations

import dataclasses

import numpy as np


def round_sig(x: float, digits: int = 12) -> float:
    """Round to a fixed number of significant digits (keeps JSON stable)."""
    return float(f"{float(x):.{digits}g}")


def jsonify(obj):
    """Recursively convert dataclasses, numpy scalars/arrays, and containers
    into plain JSON types, rounding every float to 12 significant digits."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round_sig(float(obj))
    if isinstance(obj, np.ndarray):
        return [jsonify(v) for v in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: jsonify(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonify(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")
