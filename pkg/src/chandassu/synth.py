"""Synthetic padyam fixtures.

Builds texts that satisfy every constraint of a meter by construction:
each laghuvu becomes తి and each guruvu తీ, so every token is a simple
consonant-vowel aksharam whose weight is exactly the vowel sign's length,
line-initial and yati-sthanam aksharams share both vowel class and base
letter, and every line's second aksharam has the same skeleton. Used by
the property suites, the service golden tests, and UI fixtures; no
published corpus is required to exercise the full pipeline.
"""

from __future__ import annotations

from .ganam import GANAM_BY_NAME
from .meter_config import load_config

LAGHUVU_TOKEN = "తి"  # తి
GURUVU_TOKEN = "తీ"  # తీ


def tokens_for_pattern(pattern: str) -> list[str]:
    return [LAGHUVU_TOKEN if mark == "|" else GURUVU_TOKEN for mark in pattern]


def perfect_padyam(type_name: str, config_dir=None) -> str:
    """A text scoring 1.0 on every micro-score applicable to the type.

    Each configured position emits its first alternative's pattern, so
    the weighted stream tiles the ganam grid exactly.
    """
    config = load_config(type_name, config_dir)
    lines = []
    for line in config.gana_kramam:
        tokens: list[str] = []
        for alternatives in line:
            pattern = GANAM_BY_NAME[alternatives[0]].pattern
            tokens.extend(tokens_for_pattern(pattern))
        lines.append("".join(tokens))
    return "\n".join(lines)


def perfect_lg_stream(type_name: str, config_dir=None) -> str:
    """The LG string the perfect padyam's tokens carry."""
    config = load_config(type_name, config_dir)
    return "".join(
        GANAM_BY_NAME[alternatives[0]].pattern
        for line in config.gana_kramam
        for alternatives in line
    )
