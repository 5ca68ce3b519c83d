"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line (run with ``pytest tests/test_acceptance.py -v -rA``).

Criteria 1, 2, 3, 5 and 7 reproduce published corpus figures and need the
4,651-padyam dataset; they skip, with the reason stated, when no dataset
is reachable (set CHANDASSU_DATASET or put the files under data/).
Criteria 4 and 6 run self-contained.
"""

from __future__ import annotations

import random
import time

import pytest

from chandassu.corpus import (
    load_dataset,
    run_benchmark,
    verify_lg_annotations,
)
from chandassu.errors import InputShapeError
from chandassu.ganam import GANAM_TABLE
from chandassu.meter_config import TYPE_ORDER, load_config
from chandassu.padya_bhedam import UNMATCHED, evaluate, match_ganams
from chandassu.prosody import AnnotatedToken, generate_lg
from chandassu.synth import (
    GURUVU_TOKEN,
    LAGHUVU_TOKEN,
    perfect_lg_stream,
    perfect_padyam,
)
from chandassu.tokenizer import tokenize
from chandassu.varnamala import remove_gunintha_chihnam

from conftest import make_record, require_dataset
from helpers import FUZZ_ALPHABET
from test_tokenizer import expected_reconstruction

# Published benchmark values (percent) and their tolerances (points).
OVERALL_C = (91.73, 1.0)
STRUCTURAL = {
    "n_aksharaalu_score": (99.43, 1.5),
    "n_paadalu_score": (99.93, 1.5),
    "gana_kramam_score": (93.82, 1.5),
    "prasa_score": (94.54, 1.5),
}
YATI = ("yati_score", 78.69, 5.0)
CLASS_C = {"Vruttamu": 94.13, "Jaathi": 89.39, "Vupajaathi": 90.75}
CLASS_C_TOL = 2.0

CLASS_COUNTS = {"Vruttamu": 1625, "Jaathi": 683, "Vupajaathi": 2343}
TYPE_COUNTS = {
    "vutpalamaala": 329,
    "champakamaala": 389,
    "saardulamu": 290,
    "mattebhamu": 617,
    "kandamu": 683,
    "teytageethi": 676,
    "aataveladi": 995,
    "seesamu": 672,
}
TOTAL_RECORDS = 4651

VRUTTAMU_TYPES = ("vutpalamaala", "champakamaala", "saardulamu", "mattebhamu")


def check(label: str, ok: bool, detail: str = ""):
    print(f"ACCEPTANCE {label}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, f"{label} {detail}"


@pytest.fixture(scope="module")
def corpus_benchmark():
    """Load the published dataset and run the benchmark once."""
    path = require_dataset()
    errors: list = []
    records = load_dataset(path, error_sink=errors)
    started = time.monotonic()
    summary = run_benchmark(records)
    elapsed = time.monotonic() - started
    return records, errors, summary, elapsed


class TestCriterion1OverallScore:
    def test_overall_chandassu_score(self, corpus_benchmark):
        _, _, summary, elapsed = corpus_benchmark
        got = 100 * summary.overall_chandassu
        expected, tol = OVERALL_C
        check(
            "1 overall Chandassu Score",
            abs(got - expected) <= tol,
            f"(got {got:.2f}, expected {expected} +/- {tol})",
        )
        check(
            "1 runtime",
            elapsed < 120,
            f"({elapsed:.1f}s single-threaded, limit 120s)",
        )


class TestCriterion2StructuralScores:
    def test_structural_micro_means(self, corpus_benchmark):
        _, _, summary, _ = corpus_benchmark
        for key, (expected, tol) in STRUCTURAL.items():
            value = summary.overall_scores[key]
            got = 100 * value if value is not None else float("nan")
            check(
                f"2 {key}",
                value is not None and abs(got - expected) <= tol,
                f"(got {got:.2f}, expected {expected} +/- {tol})",
            )


class TestCriterion3YatiScores:
    def test_yati_mean(self, corpus_benchmark):
        _, _, summary, _ = corpus_benchmark
        key, expected, tol = YATI
        value = summary.overall_scores[key]
        got = 100 * value if value is not None else float("nan")
        check(
            "3 yati_score",
            value is not None and abs(got - expected) <= tol,
            f"(got {got:.2f}, expected {expected} +/- {tol})",
        )

    def test_per_class_chandassu(self, corpus_benchmark):
        _, _, summary, _ = corpus_benchmark
        for class_name, expected in CLASS_C.items():
            got = 100 * summary.per_class[class_name].mean_chandassu
            check(
                f"3 class C {class_name}",
                abs(got - expected) <= CLASS_C_TOL,
                f"(got {got:.2f}, expected {expected} +/- {CLASS_C_TOL})",
            )


class TestCriterion4TableShape:
    def test_dash_structure(self):
        """c_na populated only for the four Vruttamu types; c_pr only for
        Vruttamu types and kandamu. Config-driven, so synthetic records
        exercise it fully."""
        records = [make_record(t) for t, _ in TYPE_ORDER]
        summary = run_benchmark(records)
        ok = True
        for type_name, _ in TYPE_ORDER:
            scores = summary.per_type[type_name].mean_scores
            want_na = type_name in VRUTTAMU_TYPES
            want_pr = type_name in VRUTTAMU_TYPES or type_name == "kandamu"
            ok = ok and (scores["n_aksharaalu_score"] is not None) == want_na
            ok = ok and (scores["prasa_score"] is not None) == want_pr
        check("4 per-type table dash structure", ok)


class TestCriterion5LgAgreement:
    def test_annotation_agreement(self, corpus_benchmark):
        records, _, _, _ = corpus_benchmark
        report = verify_lg_annotations(records)
        check(
            "5 LG annotation agreement",
            report.agreement >= 0.99,
            f"(got {100 * report.agreement:.2f}%, "
            f"{len(report.disagreements)} disagreements itemized)",
        )


class TestCriterion6PropertySuites:
    def test_a_tokenizer_reconstruction_10k(self):
        rng = random.Random(20250810)
        failures = 0
        for _ in range(10_000):
            text = "".join(
                rng.choice(FUZZ_ALPHABET) for _ in range(rng.randrange(0, 40))
            )
            try:
                tokens = tokenize(text)
            except InputShapeError:
                continue  # contracted behavior for dangling dead consonants
            if "".join(tokens) != expected_reconstruction(text):
                failures += 1
        check("6a tokenizer reconstruction (10,000 fuzz strings)", failures == 0,
              f"({failures} failures)")

    def test_b_lg_length_matches_tokenization(self):
        rng = random.Random(123)
        failures = 0
        for _ in range(2_000):
            text = "".join(
                rng.choice(FUZZ_ALPHABET) for _ in range(rng.randrange(0, 40))
            )
            try:
                tokens = tokenize(text)
            except InputShapeError:
                continue
            if len(generate_lg(text)) != len(tokens):
                failures += 1
        check("6b |generate_lg| == |tokenize|", failures == 0, f"({failures} failures)")

    def test_c_ganam_bijectivity(self):
        names = {g.name for g in GANAM_TABLE}
        patterns = {g.pattern for g in GANAM_TABLE}
        check(
            "6c ganam table bijectivity",
            len(GANAM_TABLE) == 17 and len(names) == 17 and len(patterns) == 17,
        )

    def test_d_perfect_padyams_score_one(self):
        ok = True
        for type_name, _ in TYPE_ORDER:
            report = evaluate(perfect_padyam(type_name), type_name)
            micros = report.micro_scores()
            ok = ok and all(v == 1.0 for v in micros.values())
            ok = ok and report.chandassu_score == 1.0
        check("6d perfect padyams score 1.0 on all 8 types", ok)

    def test_e_single_flip_costs_one_hit(self):
        ok = True
        for type_name in VRUTTAMU_TYPES:
            config = load_config(type_name)
            marks = perfect_lg_stream(type_name)
            full_hits = config.total_positions
            for position in range(len(marks)):
                flipped = list(marks)
                flipped[position] = "U" if flipped[position] == "|" else "|"
                stream = [
                    AnnotatedToken(
                        LAGHUVU_TOKEN if m == "|" else GURUVU_TOKEN, m
                    )
                    for m in flipped
                ]
                breakdown, hits, _ = match_ganams(stream, config)
                unmatched = sum(
                    1
                    for row in breakdown
                    for cell in row
                    if cell.matched_name == UNMATCHED
                )
                ok = ok and hits == full_hits - 1 and unmatched == 1
        check("6e single mark flip costs exactly one ganam hit", ok)

    def test_f_chandassu_mean_recomputation(self):
        texts = [perfect_padyam(t) for t, _ in TYPE_ORDER]
        lines = perfect_padyam("teytageethi").split("\n")
        lines[2] = "కూకి" + lines[2][4:]
        texts.append("\n".join(lines))
        texts.append(perfect_padyam("vutpalamaala") + "\n" + LAGHUVU_TOKEN * 7)
        ok = True
        for text in texts:
            for type_name, _ in TYPE_ORDER:
                report = evaluate(text, type_name)
                micros = list(report.micro_scores().values())
                ok = ok and abs(
                    report.chandassu_score - sum(micros) / len(micros)
                ) < 1e-9
        check("6f Chandassu Score equals mean of micro-scores (1e-9)", ok)

    def test_g_remove_gunintha_idempotent(self):
        rng = random.Random(7)
        alphabet = "కఖతమరల" + "ాిీుూృెేైొోౌ" + "్"
        ok = True
        for _ in range(2_000):
            token = "".join(
                rng.choice(alphabet) for _ in range(rng.randrange(1, 8))
            )
            once = remove_gunintha_chihnam(token)
            ok = ok and remove_gunintha_chihnam(once) == once
        check("6g remove_gunintha_chihnam idempotence", ok)


class TestCriterion7Census:
    def test_census(self, corpus_benchmark):
        records, errors, _, _ = corpus_benchmark
        check(
            "7 record count",
            len(records) == TOTAL_RECORDS and not errors,
            f"(got {len(records)}, {len(errors)} malformed rows)",
        )
        class_counts: dict[str, int] = {}
        type_counts: dict[str, int] = {}
        for record in records:
            class_counts[record.class_name] = class_counts.get(record.class_name, 0) + 1
            type_counts[record.type_name] = type_counts.get(record.type_name, 0) + 1
        check("7 class counts", class_counts == CLASS_COUNTS, f"(got {class_counts})")
        check("7 type counts", type_counts == TYPE_COUNTS, f"(got {type_counts})")
