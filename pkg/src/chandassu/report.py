"""Shared analysis payload: one serialization for CLI and HTTP service.

The structured output of ``chandassu evaluate``/``detect`` and the body
of POST /api/v1/analyze are produced by the same two functions here, so
the service response is byte-identical to the CLI output for the same
input. The schema is versioned; field names follow the score report keys.
"""

from __future__ import annotations

import json
from typing import Optional

from .padya_bhedam import ScoreReport, evaluate, evaluate_auto
from .prosody import generate_lg
from .tokenizer import tokenize_lines

SCHEMA_VERSION = 1


def _token_lines(text: str) -> list[list[dict]]:
    """Per-input-line annotated tokens.

    Weights are computed over the flat stream (a token's weight can
    depend on the next token across a line break) and re-split using the
    per-line token counts, so the line view never drifts from what the
    scorer saw.
    """
    flat = generate_lg(text)
    counts = [len(line) for line in tokenize_lines(text)]
    if sum(counts) != len(flat):  # degenerate cross-line fusion
        counts = [len(flat)]
    lines = []
    start = 0
    for count in counts:
        lines.append(
            [
                {"token": a.token, "mark": a.mark}
                for a in flat[start : start + count]
            ]
        )
        start += count
    return lines


def analysis_payload(
    text: str, type_name: Optional[str] = None, config_dir=None
) -> dict:
    """Full analysis of one padyam as a JSON-ready mapping."""
    if type_name is None:
        detected, report = evaluate_auto(text, config_dir)
    else:
        detected = type_name
        report = evaluate(text, type_name, config_dir)
    return {
        "schema_version": SCHEMA_VERSION,
        "detected_type": detected,
        "tokens": _token_lines(text),
        "ganam_cells": [
            [
                {
                    "tokens": [
                        {"token": a.token, "mark": a.mark} for a in cell.tokens
                    ],
                    "matched_name": cell.matched_name,
                }
                for cell in row
            ]
            for row in report.paadam_breakdown
        ],
        "micro_scores": report.micro_scores(),
        "chandassu_score": report.chandassu_score,
        "yati_verdicts": report.yati_verdicts,
        "prasa_modal_aksharam": report.prasa_modal_aksharam,
    }


def payload_json(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def render_report_text(report: ScoreReport) -> str:
    """Human-readable score block plus the per-line ganam grid."""
    lines = [f"type: {report.type_name}"]
    for key, value in report.micro_scores().items():
        lines.append(f"{key}: {value:.2f}")
    lines.append(f"chandassu_score: {report.chandassu_score:.2f}")
    lines.append(
        "yati: "
        + (
            " ".join("pass" if v else "fail" for v in report.yati_verdicts)
            or "-"
        )
    )
    if report.prasa_modal_aksharam is not None:
        lines.append(f"prasa_modal_aksharam: {report.prasa_modal_aksharam}")
    for row_no, row in enumerate(report.paadam_breakdown, start=1):
        cells = " ".join(
            f"{cell.matched_name}({''.join(a.token for a in cell.tokens)})"
            for cell in row
        )
        lines.append(f"paadam {row_no}: {cells}")
    return "\n".join(lines)
