"""Structured report records and their text and JSON renderings.

A report file pair ``<out>.json`` / ``<out>.txt`` holds a *body* (inputs,
results, pass/fail) and a *meta* block (version, timestamp, wall time).  The
body is a pure function of the job, so two runs of one job with one seed
produce identical bodies; everything time-dependent goes into meta.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import math
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

from siegel_jacobi.config.tolerances import REPORT_SCHEMA

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------


def _derived_properties(obj: object) -> list[str]:
    """Names of the read-only properties a report class declares, sorted."""
    names: set[str] = set()
    for klass in type(obj).__mro__:
        names.update(name for name, attr in vars(klass).items() if isinstance(attr, property))
    return sorted(names)


def _float(x: float) -> float | str:
    if math.isfinite(x):
        return x
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def to_record(obj: Any) -> Any:
    """Convert a report (or anything inside one) to JSON-safe data.

    Complex numbers become ``{"re": .., "im": ..}``, arrays nested lists,
    dataclasses dicts of their fields followed by their properties, and
    mappings with non-string keys lists of ``{"key": .., "value": ..}``.
    """
    match obj:
        case None | bool() | str():
            return obj
        case Enum():
            return obj.value
        case np.generic():
            return to_record(obj.item())
        case int():
            return obj
        case float():
            return _float(obj)
        case complex():
            return {"re": _float(obj.real), "im": _float(obj.imag)}
        case np.ndarray():
            return to_record(obj.tolist())
        case Path():
            return str(obj)
        case dict():
            if all(isinstance(k, str) for k in obj):
                return {k: to_record(v) for k, v in obj.items()}
            return [{"key": to_record(k), "value": to_record(v)} for k, v in obj.items()]
        case list() | tuple():
            return [to_record(x) for x in obj]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        record = {f.name: to_record(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for name in _derived_properties(obj):
            record.setdefault(name, to_record(getattr(obj, name)))
        return record
    raise TypeError(f"cannot convert {type(obj).__name__} to a report record")


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------


def _scalar_text(value: Any) -> str:
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        re, im = value["re"], value["im"]
        if isinstance(re, str) or isinstance(im, str):
            return f"{re}+({im})i"
        return f"{re:.15g}{im:+.15g}i"
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


def _is_scalar(value: Any) -> bool:
    if isinstance(value, dict):
        return set(value) == {"re", "im"}
    if isinstance(value, list):
        return all(not isinstance(x, (dict, list)) for x in value)
    return True


def _format_value(key: str, value: Any, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    if _is_scalar(value):
        text = (
            "[" + ", ".join(_scalar_text(x) for x in value) + "]"
            if isinstance(value, list)
            else _scalar_text(value)
        )
        lines.append(f"{pad}{key}: {text}")
        return
    lines.append(f"{pad}{key}:")
    if isinstance(value, dict):
        for k, v in value.items():
            _format_value(k, v, depth + 1, lines)
    else:
        for i, item in enumerate(value):
            _format_value(f"[{i}]", item, depth + 1, lines)


def format_report(body: dict[str, Any]) -> str:
    """Format a report body as human-readable output.

    Args:
        body: A record produced by the CLI runner (``task``, ``inputs``,
            ``results``, ``passed`` …).

    Returns:
        A multi-line string with a status header followed by every field.
    """
    status = "PASS" if body.get("passed", False) else "FAIL"
    results = body.get("results", [])
    lines: list[str] = [
        f"Task {body.get('task', '?')}: {status} ({len(results)} result(s))",
        "",
    ]
    inputs = body.get("inputs", {})
    if inputs:
        lines.append("Inputs:")
        for key, value in inputs.items():
            _format_value(key, value, 1, lines)
        lines.append("")
    for i, result in enumerate(results):
        lines.append(f"Result {i}:")
        for key, value in result.items():
            _format_value(key, value, 1, lines)
        lines.append("")
    for key, value in body.items():
        if key not in {"task", "inputs", "results", "passed"}:
            _format_value(key, value, 0, lines)
    return "\n".join(lines).rstrip() + "\n"


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------


def build_meta(version: str, wall_time: float) -> dict[str, Any]:
    return {
        "version": version,
        "timestamp": datetime.now(tz=timezone.utc).isoformat(),
        "wall_time_seconds": wall_time,
    }


def write_report(out: Path, body: dict[str, Any], meta: dict[str, Any]) -> tuple[Path, Path]:
    """Write ``<out>.json`` and ``<out>.txt`` and return both paths."""
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    json_path = out.with_name(out.name + ".json")
    txt_path = out.with_name(out.name + ".txt")
    document = {"schema": REPORT_SCHEMA, "body": body, "meta": meta}
    json_path.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    header = (
        f"# schema {REPORT_SCHEMA}, generated {meta.get('timestamp', '?')}, "
        f"wall time {meta.get('wall_time_seconds', 0.0):.3f}s\n"
    )
    txt_path.write_text(header + format_report(body), encoding="utf-8")
    logger.info("Report written to %s and %s", json_path, txt_path)
    return json_path, txt_path
