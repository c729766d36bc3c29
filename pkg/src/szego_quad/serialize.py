"""Deterministic text artifacts: fixed float formatting, stable key order.

Identical inputs must produce byte-identical files, so floats are always
rendered as 17-significant-digit lowercase scientific notation and JSON is
emitted by a small writer with insertion-ordered keys and no ambient state.
"""

from __future__ import annotations

import json as _json

import numpy as np


def fmt_float(x) -> str:
    return f"{float(x):.16e}"


def _render(obj, indent, level):
    pad = " " * (indent * level)
    pad_in = " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if isinstance(obj, str):
        return _json.dumps(obj)
    if isinstance(obj, (list, tuple, np.ndarray)):
        items = [_render(v, indent, level + 1) for v in obj]
        if not items:
            return "[]"
        body = (",\n" + pad_in).join(items)
        return "[\n" + pad_in + body + "\n" + pad + "]"
    if isinstance(obj, dict):
        items = [
            _json.dumps(str(k)) + ": " + _render(v, indent, level + 1) for k, v in obj.items()
        ]
        if not items:
            return "{}"
        body = (",\n" + pad_in).join(items)
        return "{\n" + pad_in + body + "\n" + pad + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def json_text(obj, indent=2) -> str:
    return _render(obj, indent, 0) + "\n"


def csv_text(header, rows) -> str:
    lines = [header]
    for row in rows:
        lines.append(",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def rule_csv(rule) -> str:
    rows = [
        (k + 1, fmt_float(t), fmt_float(w))
        for k, (t, w) in enumerate(zip(rule.node_angles, rule.weights))
    ]
    return csv_text("k,theta,weight", rows)


def rule_json(rule) -> str:
    return json_text(
        {
            "order": rule.order,
            "omega0": rule.omega0,
            "node_angles": list(map(float, rule.node_angles)),
            "weights": list(map(float, rule.weights)),
            "source": rule.source,
            "exactness_residual": rule.exactness_residual,
        }
    )


def zero_rows_csv(entries) -> str:
    """entries: iterable of (n, zeros array)."""
    rows = []
    for n, zeros in entries:
        for k, theta in enumerate(zeros):
            rows.append((n, k + 1, fmt_float(theta)))
    return csv_text("n,k,theta", rows)


def zero_rows_json(entries) -> str:
    return json_text(
        {
            "zeros": [
                {"n": int(n), "k": k + 1, "theta": float(theta)}
                for n, zeros in entries
                for k, theta in enumerate(zeros)
            ]
        }
    )


def moments_csv(table) -> str:
    rows = [(k, fmt_float(c.real), fmt_float(c.imag)) for k, c in enumerate(table.c)]
    return csv_text("k,re,im", rows)


def moments_json(table) -> str:
    return json_text(
        {
            "K": table.K,
            "moments": [
                {"k": k, "re": float(c.real), "im": float(c.imag)}
                for k, c in enumerate(table.c)
            ],
        }
    )


def schur_csv(seq) -> str:
    rows = [
        (n + 1, fmt_float(a.real), fmt_float(a.imag))
        for n, a in enumerate(seq.coefficients)
    ]
    return csv_text("n,re,im", rows)


def schur_json(seq) -> str:
    return json_text(
        {
            "n_max": seq.max_order,
            "coefficients": [
                {"n": n + 1, "re": float(a.real), "im": float(a.imag)}
                for n, a in enumerate(seq.coefficients)
            ],
        }
    )


def interlace_csv(results) -> str:
    """results: iterable of (n, n_next, ok, witness)."""
    rows = [
        (n, n2, "pass" if ok else "fail", "" if witness is None else witness.replace(",", ";"))
        for n, n2, ok, witness in results
    ]
    return csv_text("n,next,status,witness", rows)


def interlace_json(results) -> str:
    return json_text(
        {
            "pairs": [
                {
                    "n": n,
                    "next": n2,
                    "status": "pass" if ok else "fail",
                    "witness": witness,
                }
                for n, n2, ok, witness in results
            ]
        }
    )


def support_json(est) -> str:
    return json_text(
        {
            "arcs": [[float(lo), float(hi)] for lo, hi in est.arcs],
            "epsilon": est.epsilon,
            "n_max": est.n_max,
            "anchors": list(map(float, est.anchor_angles)),
        }
    )
