"""Yati and prasa-yati validation.

Generic yati holds between a line's first aksharam and the aksharam at
the configured yati sthanam when both their vowels and at least one pair
of their base letters are congruent under the yati table. Where the meter
admits it, a failed generic check falls back to prasa-yati: the two
positions' first vowels must agree in length (both hraswa or both
deergha) and the aksharams following each position must share the same
consonant skeleton once diacritics are stripped.

The vowel congruence scan walks the classes in order and fails fast the
moment the first token's diacritic sits in a class that excludes the
second's. Because an absent diacritic is represented as "" (a substring
of every class), a bare first aksharam passes vowel congruence only
against another bare aksharam, while a marked first aksharam tolerates a
bare second one. That token-order asymmetry is intentional and pinned by
tests; resolving it symmetrically would change corpus-level yati scores.
"""

from __future__ import annotations

from .errors import ConfigShapeError
from .meter_config import PadyamConfig, YatiTable
from .varnamala import (
    DEERGHA_CHIHNAMULU,
    HRASWA_CHIHNAMULU,
    VOWEL_DIACRITICS,
    extract_aksharam,
    extract_gunintha_chihnam,
    remove_gunintha_chihnam,
    strip_bindu_visarga,
)


def yati_check(first_letter: str, yati_sthanam_letter: str, table: YatiTable) -> bool:
    """Generic yati congruence between two aksharam tokens."""
    first = strip_bindu_visarga(first_letter)
    second = strip_bindu_visarga(yati_sthanam_letter)
    chihnam_a = extract_gunintha_chihnam(first)
    chihnam_b = extract_gunintha_chihnam(second)

    classes = table.all_classes()
    chihna_yati = False
    for cls in classes:
        if chihnam_a in cls:
            if chihnam_b in cls:
                chihna_yati = True
            else:
                return False

    akshara_yati = False
    second_letters = set(extract_aksharam(second))
    for letter in set(extract_aksharam(first)):
        for cls in classes:
            if letter in cls and any(b in cls for b in second_letters):
                akshara_yati = True
                break
        if akshara_yati:
            break

    return chihna_yati and akshara_yati


def _is_hraswa_flag(flag: str) -> bool:
    # A bare aksharam (no diacritic) carries the inherent short vowel.
    return flag == " " or flag in HRASWA_CHIHNAMULU


def _is_deergha_flag(flag: str) -> bool:
    return flag in DEERGHA_CHIHNAMULU


def prasa_yati_check(
    padamwise_ganam_data,
    type_name: str,
    config: PadyamConfig,
    only_generic: bool,
    table: YatiTable,
) -> list[bool]:
    """Per-paadam yati verdicts over matched ganam rows.

    ``padamwise_ganam_data`` is the per-line list of ganam cells produced
    by the matching pass; each cell exposes ``.tokens`` (annotated token
    list). Kandamu restricts the examined rows to the configured
    yati_paadalu; every other meter examines every matched row. Rows
    whose first or yati-sthanam cell captured fewer than two aksharams
    are degenerate and score False.
    """
    rows = padamwise_ganam_data
    if type_name == "kandamu":
        rows = [
            padamwise_ganam_data[i - 1]
            for i in config.yati_paadalu
            if i - 1 < len(padamwise_ganam_data)
        ]

    ys_ganam, ys_offset = config.yati_sthanam
    verdicts: list[bool] = []
    for row in rows:
        if ys_ganam > len(row):
            raise ConfigShapeError(
                f"yati_sthanam ganam {ys_ganam} beyond row of {len(row)} cells"
            )
        first_cell = row[0].tokens
        ys_cell = row[ys_ganam - 1].tokens
        if len(first_cell) <= 1 or len(ys_cell) <= 1:
            verdicts.append(False)
            continue
        if ys_offset >= len(ys_cell):
            # Truncated cell at the stream's end: degenerate row.
            verdicts.append(False)
            continue

        first_letters = [a.token for a in first_cell]
        ys_letter = ys_cell[ys_offset].token
        generic = yati_check(first_letters[0], ys_letter, table)
        if only_generic:
            verdicts.append(generic)
            continue
        if generic:
            verdicts.append(True)
            continue

        # Prasa-yati fallback, on the first two aksharams of each cell.
        ys_pair = [a.token for a in ys_cell][:2]
        flag_1 = " "
        if first_letters[0][-1] in VOWEL_DIACRITICS:
            flag_1 = first_letters[0][-1]
        flag_2 = " "
        if ys_pair[0][-1] in VOWEL_DIACRITICS:
            flag_2 = ys_pair[0][-1]
        skeleton_1 = remove_gunintha_chihnam(first_letters[1])
        skeleton_2 = remove_gunintha_chihnam(ys_pair[1])
        lengths_agree = (
            _is_hraswa_flag(flag_1)
            and _is_hraswa_flag(flag_2)
        ) or (
            _is_deergha_flag(flag_1)
            and _is_deergha_flag(flag_2)
        )
        verdicts.append(lengths_agree and skeleton_1 == skeleton_2)

    return verdicts
