"""Padyam evaluation: ganam matching, constraint scores, Chandassu Score.

The matcher consumes the flat weighted-token stream left to right against
each configured line, trying the position's alternatives in order and
taking the first whose pattern equals the upcoming slice. When nothing
matches, the cell is recorded as "UnMatched" and the cursor still
advances by the length of the last alternative tried; the benchmark
figures were produced by exactly this behavior, so it is the default. A
strict mode advancing by the first alternative's length exists for
sensitivity analysis only.

Each applicable constraint yields one micro-score and the Chandassu Score
is their arithmetic mean:

    n_paadalu_score     lines opening with a multi-token ganam / expected
                        paadams (seesamu halves the count: two physical
                        lines per paadam)
    gana_kramam_score   matched cells / configured positions
    yati_score          passing yati rows / rows expected to satisfy yati
    n_aksharaalu_score  (captured - leftover) / expected aksharams; can
                        go negative when spurious tokens dominate
    prasa_score         modal frequency of the second aksharam's skeleton
                        across lines / expected paadams
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import EmptyInputError
from .ganam import GANAM_BY_NAME, PATTERN_TO_NAME
from .lakshanam import prasa_yati_check
from .meter_config import (
    TYPE_ORDER,
    PadyamConfig,
    load_config,
    load_yati_table,
)
from .prosody import AnnotatedToken, generate_lg
from .varnamala import remove_gunintha_chihnam

UNMATCHED = "UnMatched"


@dataclass
class GanamMatchCell:
    tokens: list[AnnotatedToken]
    matched_name: str  # a ganam name or UNMATCHED


@dataclass
class ScoreReport:
    type_name: str
    n_paadalu_score: float
    gana_kramam_score: float
    yati_score: float
    n_aksharaalu_score: Optional[float]
    prasa_score: Optional[float]
    chandassu_score: float
    paadam_breakdown: list[list[GanamMatchCell]] = field(repr=False)
    yati_verdicts: list[bool] = field(default_factory=list)
    prasa_modal_aksharam: Optional[str] = None

    def micro_scores(self) -> dict[str, float]:
        """Present micro-scores, keyed and ordered as serialized."""
        scores = {
            "n_paadalu_score": self.n_paadalu_score,
            "gana_kramam_score": self.gana_kramam_score,
            "yati_score": self.yati_score,
        }
        if self.n_aksharaalu_score is not None:
            scores["n_aksharaalu_score"] = self.n_aksharaalu_score
        if self.prasa_score is not None:
            scores["prasa_score"] = self.prasa_score
        return scores


def match_ganams(
    lg_data: list[AnnotatedToken],
    config: PadyamConfig,
    strict_advance: bool = False,
) -> tuple[list[list[GanamMatchCell]], int, int]:
    """Tile the weighted stream against the configured ganam grid.

    Returns (per-line cells, matched-cell count, paadam count). Matching
    stops once the stream is exhausted; later lines are absent.
    """
    breakdown: list[list[GanamMatchCell]] = []
    hits = 0
    paadam_count = 0
    end = 0
    for line in config.gana_kramam:
        ganam_data: list[GanamMatchCell] = []
        for alternatives in line:
            matched = False
            tried = alternatives[0]
            for name in alternatives:
                tried = name
                length = len(GANAM_BY_NAME[name].pattern)
                window = lg_data[end : end + length]
                pattern = "".join(a.mark for a in window)
                if PATTERN_TO_NAME.get(pattern) == name:
                    ganam_data.append(GanamMatchCell(list(window), name))
                    hits += 1
                    matched = True
                    break
            if not matched:
                advance_by = alternatives[0] if strict_advance else tried
                length = len(GANAM_BY_NAME[advance_by].pattern)
                ganam_data.append(
                    GanamMatchCell(list(lg_data[end : end + length]), UNMATCHED)
                )
                tried = advance_by
            end += len(GANAM_BY_NAME[tried].pattern)
        if len(ganam_data[0].tokens) > 1:
            paadam_count += 1
        breakdown.append(ganam_data)
        if end >= len(lg_data):
            break
    return breakdown, hits, paadam_count


def evaluate(
    text: str,
    type_name: str,
    config_dir=None,
    strict_advance: bool = False,
) -> ScoreReport:
    """Score one padyam against one meter type."""
    config = load_config(type_name, config_dir)
    lg_data = generate_lg(text)
    if not lg_data:
        raise EmptyInputError("no Telugu aksharams in input")

    breakdown, hits, paadam_count = match_ganams(
        lg_data, config, strict_advance=strict_advance
    )
    table = load_yati_table(config_dir)
    verdicts = prasa_yati_check(
        breakdown, type_name, config, config.only_generic_yati, table
    )

    n_paadalu = config.n_paadalu
    found_paadalu = paadam_count / 2 if type_name == "seesamu" else paadam_count
    scores: dict[str, float] = {
        "n_paadalu_score": found_paadalu / n_paadalu,
        "gana_kramam_score": hits / config.total_positions,
        "yati_score": sum(verdicts) / len(config.yati_paadalu),
    }

    if config.n_aksharalu is not None:
        captured = sum(len(cell.tokens) for row in breakdown for cell in row)
        leftover = len(lg_data) - captured
        scores["n_aksharaalu_score"] = (captured - leftover) / (
            n_paadalu * config.n_aksharalu
        )

    prasa_modal = None
    if config.prasa:
        frequency: dict[str, int] = {}
        for row in breakdown:
            try:
                aksharam = remove_gunintha_chihnam(row[0].tokens[1].token)
            except IndexError:
                continue  # degenerate first cell: no second aksharam
            frequency[aksharam] = frequency.get(aksharam, 0) + 1
        if frequency:
            scores["prasa_score"] = max(frequency.values()) / n_paadalu
            prasa_modal = max(frequency, key=frequency.get)
        else:
            scores["prasa_score"] = 0.0

    chandassu_score = sum(scores.values()) / len(scores)
    return ScoreReport(
        type_name=type_name,
        n_paadalu_score=scores["n_paadalu_score"],
        gana_kramam_score=scores["gana_kramam_score"],
        yati_score=scores["yati_score"],
        n_aksharaalu_score=scores.get("n_aksharaalu_score"),
        prasa_score=scores.get("prasa_score"),
        chandassu_score=chandassu_score,
        paadam_breakdown=breakdown,
        yati_verdicts=list(verdicts),
        prasa_modal_aksharam=prasa_modal,
    )


def _best(results: list[tuple[str, ScoreReport]]) -> tuple[str, ScoreReport]:
    """Highest Chandassu Score; ties go to the earlier-listed type."""
    best_name, best_report = results[0]
    for name, report in results[1:]:
        if report.chandassu_score > best_report.chandassu_score:
            best_name, best_report = name, report
    return best_name, best_report


def evaluate_auto(
    text: str, config_dir=None, strict_advance: bool = False
) -> tuple[str, ScoreReport]:
    """Score against every type and return the best-fitting one."""
    results = [
        (type_name, evaluate(text, type_name, config_dir, strict_advance))
        for type_name, _ in TYPE_ORDER
    ]
    return _best(results)
