"""Human-readable tables for --pretty (written to stderr)."""

from collections.abc import Mapping
from typing import Any


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.3e}" if value and (abs(value) < 1e-3 or abs(value) >= 1e4) else f"{value:.6g}"
    if isinstance(value, list | tuple) and value and all(isinstance(x, int | float) for x in value):
        return "[" + ", ".join(_cell(x) for x in value) + "]"
    return str(value)


def table(title: str, rows: Mapping[str, Any]) -> str:
    if not rows:
        return f"{title}\n  (empty)"
    width = max(len(str(key)) for key in rows)
    lines = [title, "-" * len(title)]
    lines += [f"  {str(key).ljust(width)}  {_cell(value)}" for key, value in rows.items()]
    return "\n".join(lines)


def render(command: str, result: Mapping[str, Any]) -> str:
    payload = result["payload"]
    sections = [table(f"{command}: inputs", result["inputs"])]

    scalars = {k: v for k, v in payload.items() if not isinstance(v, Mapping | list) or k == "signature"}
    if scalars:
        sections.append(table(f"{command}: result", scalars))
    if isinstance(payload.get("residuals"), Mapping):
        sections.append(table(f"{command}: residuals", payload["residuals"]))
    if isinstance(payload.get("criteria"), list):
        sections.append(
            table(
                f"{command}: criteria",
                {
                    f"{c['id']:>2} {c['name']}": ("PASS " if c["passed"] else "FAIL ") + _cell(c["worst_residual"])
                    for c in payload["criteria"]
                },
            )
        )
    for key in ("errors", "warnings"):
        if payload.get(key):
            sections.append(table(f"{command}: {key}", {str(i): msg for i, msg in enumerate(payload[key])}))
    sections.append(table(f"{command}: summary", result.get("residual_summary", {})))
    return "\n\n".join(sections)
