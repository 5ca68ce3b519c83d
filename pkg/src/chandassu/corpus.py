"""Dataset ingestion and the corpus benchmark harness.

Records carry five fields (type, padyam, class, satakam, lg) and load
from CSV, JSON arrays, or JSON-lines files, or a directory of them. The
LG annotation is accepted either as a compact "U|U..." string or as a
per-token list and is normalized to the compact form.

The benchmark evaluates every record against its labeled type, never
aborts on a bad record (failures score zero and are tallied), and
aggregates arithmetic means per class, per type, and overall. Aggregation
is order-independent. Rendered tables show a dash wherever a constraint
does not apply to the row's types.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import ChandassuError, SchemaError
from .meter_config import CLASS_OF_TYPE, CLASS_ORDER, TYPE_ORDER, load_config
from .padya_bhedam import evaluate
from .prosody import generate_lg, render_lg

FIELDS = ("type", "padyam", "class", "satakam", "lg")

MICRO_KEYS = (
    "n_aksharaalu_score",
    "n_paadalu_score",
    "gana_kramam_score",
    "yati_score",
    "prasa_score",
)
MICRO_LABELS = {
    "n_aksharaalu_score": "c_na",
    "n_paadalu_score": "c_np",
    "gana_kramam_score": "c_gk",
    "yati_score": "c_yt",
    "prasa_score": "c_pr",
}


@dataclass
class PadyamRecord:
    type_name: str
    padyam: str
    class_name: str
    satakam: str
    lg: Optional[str]  # compact "U|..." annotation, when present


def normalize_lg(value) -> Optional[str]:
    """Normalize an on-disk LG annotation to a compact "U|..." string."""
    if value is None:
        return None
    if isinstance(value, str):
        compact = "".join(ch for ch in value if ch in "|U")
        return compact or None
    if isinstance(value, list):
        marks = []
        for item in value:
            if isinstance(item, str):
                marks.append(item)
            elif isinstance(item, (list, tuple)) and len(item) == 2:
                marks.append(item[1])  # (token, mark) pair
            else:
                return None
        return normalize_lg("".join(marks))
    return None


def _record_from_mapping(data: dict, row: int, error_sink) -> Optional[PadyamRecord]:
    def fail(message: str):
        err = SchemaError(row, message)
        if error_sink is None:
            raise err
        error_sink.append(err)
        return None

    missing = [f for f in ("type", "padyam", "class") if not data.get(f)]
    if missing:
        return fail(f"missing field(s) {missing}")
    type_name = str(data["type"]).strip()
    class_name = str(data["class"]).strip()
    if type_name not in CLASS_OF_TYPE:
        return fail(f"unknown type {type_name!r}")
    if CLASS_OF_TYPE[type_name] != class_name:
        return fail(
            f"type {type_name!r} is class {CLASS_OF_TYPE[type_name]!r}, "
            f"row says {class_name!r}"
        )
    return PadyamRecord(
        type_name=type_name,
        padyam=str(data["padyam"]),
        class_name=class_name,
        satakam=str(data.get("satakam") or ""),
        lg=normalize_lg(data.get("lg")),
    )


def _load_file(path: Path, error_sink) -> list[PadyamRecord]:
    records: list[PadyamRecord] = []
    suffix = path.suffix.lower()
    if suffix == ".csv":
        with open(path, newline="", encoding="utf-8-sig") as fh:
            for row_no, row in enumerate(csv.DictReader(fh), start=2):
                rec = _record_from_mapping(row, row_no, error_sink)
                if rec:
                    records.append(rec)
    elif suffix == ".jsonl":
        with open(path, encoding="utf-8-sig") as fh:
            for row_no, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    data = json.loads(line)
                except json.JSONDecodeError as exc:
                    err = SchemaError(row_no, f"bad JSON: {exc}")
                    if error_sink is None:
                        raise err from None
                    error_sink.append(err)
                    continue
                rec = _record_from_mapping(data, row_no, error_sink)
                if rec:
                    records.append(rec)
    elif suffix == ".json":
        with open(path, encoding="utf-8-sig") as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise SchemaError(0, f"{path.name}: expected a JSON array")
        for row_no, item in enumerate(data, start=1):
            rec = _record_from_mapping(item, row_no, error_sink)
            if rec:
                records.append(rec)
    else:
        raise SchemaError(0, f"unsupported dataset format: {path.name}")
    return records


def load_dataset(path, error_sink: Optional[list] = None) -> list[PadyamRecord]:
    """Load records from a file or a directory of dataset files.

    Malformed rows raise SchemaError, or are collected into
    ``error_sink`` when one is passed (the benchmark path, which must
    report rather than abort).
    """
    path = Path(path)
    if path.is_dir():
        files = sorted(
            p
            for p in path.iterdir()
            if p.suffix.lower() in (".csv", ".json", ".jsonl")
        )
        if not files:
            raise FileNotFoundError(f"no dataset files under {path}")
        records = []
        for file in files:
            records.extend(_load_file(file, error_sink))
        return records
    if not path.is_file():
        raise FileNotFoundError(path)
    return _load_file(path, error_sink)


def save_dataset(records: list[PadyamRecord], path) -> None:
    """Write records as JSON lines; load_dataset round-trips them."""
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(
                json.dumps(
                    {
                        "type": rec.type_name,
                        "padyam": rec.padyam,
                        "class": rec.class_name,
                        "satakam": rec.satakam,
                        "lg": rec.lg,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )


@dataclass
class RecordScore:
    index: int
    type_name: str
    class_name: str
    satakam: str
    scores: dict[str, float]
    chandassu_score: float
    error: Optional[str] = None


@dataclass
class GroupStats:
    count: int
    mean_scores: dict[str, Optional[float]]  # None where not applicable
    mean_chandassu: float


@dataclass
class EvaluationSummary:
    total: int
    overall_chandassu: float
    overall_scores: dict[str, Optional[float]]
    per_class: dict[str, GroupStats]
    per_type: dict[str, GroupStats]
    per_satakam_counts: dict[str, int]
    per_record: list[RecordScore]
    failures: int


def _evaluate_one(args) -> tuple[dict[str, float], float, Optional[str]]:
    padyam, type_name, config_dir = args
    applicable = load_config(type_name, config_dir).applicable_scores()
    try:
        report = evaluate(padyam, type_name, config_dir)
        return report.micro_scores(), report.chandassu_score, None
    except ChandassuError as exc:
        # A record the pipeline cannot process scores zero on every
        # applicable constraint; the benchmark never skips inputs.
        return {key: 0.0 for key in applicable}, 0.0, str(exc)


def _mean_table(rows: list[RecordScore]) -> tuple[dict[str, Optional[float]], float]:
    sums: dict[str, float] = {}
    counts: dict[str, int] = {}
    c_total = 0.0
    for row in rows:
        c_total += row.chandassu_score
        for key, value in row.scores.items():
            sums[key] = sums.get(key, 0.0) + value
            counts[key] = counts.get(key, 0) + 1
    means: dict[str, Optional[float]] = {
        key: (sums[key] / counts[key] if key in counts else None)
        for key in MICRO_KEYS
    }
    return means, c_total / len(rows) if rows else 0.0


def run_benchmark(
    records: list[PadyamRecord], config_dir=None, workers: int = 1
) -> EvaluationSummary:
    """Evaluate every record against its labeled type and aggregate."""
    jobs = [(rec.padyam, rec.type_name, config_dir) for rec in records]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_evaluate_one, jobs, chunksize=64))
    else:
        outcomes = [_evaluate_one(job) for job in jobs]

    per_record = [
        RecordScore(
            index=i,
            type_name=rec.type_name,
            class_name=rec.class_name,
            satakam=rec.satakam,
            scores=scores,
            chandassu_score=c,
            error=err,
        )
        for i, (rec, (scores, c, err)) in enumerate(zip(records, outcomes))
    ]

    per_type = {}
    for type_name, _ in TYPE_ORDER:
        rows = [r for r in per_record if r.type_name == type_name]
        if rows:
            means, c = _mean_table(rows)
            per_type[type_name] = GroupStats(len(rows), means, c)
    per_class = {}
    for class_name in CLASS_ORDER:
        rows = [r for r in per_record if r.class_name == class_name]
        if rows:
            means, c = _mean_table(rows)
            per_class[class_name] = GroupStats(len(rows), means, c)
    overall_scores, overall_c = _mean_table(per_record)

    satakam_counts: dict[str, int] = {}
    for rec in records:
        satakam_counts[rec.satakam] = satakam_counts.get(rec.satakam, 0) + 1

    return EvaluationSummary(
        total=len(records),
        overall_chandassu=overall_c,
        overall_scores=overall_scores,
        per_class=per_class,
        per_type=per_type,
        per_satakam_counts=satakam_counts,
        per_record=per_record,
        failures=sum(1 for r in per_record if r.error),
    )


@dataclass
class LgDisagreement:
    record_index: int
    token_index: int
    generated: str  # "|", "U", or "-" past one side's end
    annotated: str


@dataclass
class LgAgreementReport:
    records_checked: int
    total_tokens: int
    agreeing_tokens: int
    disagreements: list[LgDisagreement] = field(default_factory=list)
    record_errors: list[tuple[int, str]] = field(default_factory=list)

    @property
    def agreement(self) -> float:
        if self.total_tokens == 0:
            return 1.0
        return self.agreeing_tokens / self.total_tokens


def verify_lg_annotations(records: list[PadyamRecord]) -> LgAgreementReport:
    """Token-level agreement between generated weights and the stored
    annotations; every disagreement is itemized with its token index."""
    report = LgAgreementReport(0, 0, 0)
    for index, rec in enumerate(records):
        if rec.lg is None:
            continue
        report.records_checked += 1
        try:
            generated = render_lg(generate_lg(rec.padyam))
        except ChandassuError as exc:
            report.record_errors.append((index, str(exc)))
            report.total_tokens += len(rec.lg)
            for pos, mark in enumerate(rec.lg):
                report.disagreements.append(
                    LgDisagreement(index, pos, "-", mark)
                )
            continue
        annotated = rec.lg
        length = max(len(generated), len(annotated))
        report.total_tokens += length
        for pos in range(length):
            mine = generated[pos] if pos < len(generated) else "-"
            theirs = annotated[pos] if pos < len(annotated) else "-"
            if mine == theirs:
                report.agreeing_tokens += 1
            else:
                report.disagreements.append(
                    LgDisagreement(index, pos, mine, theirs)
                )
    return report


def _fmt(value: Optional[float]) -> str:
    return "-" if value is None else f"{100 * value:.2f}"


def _render_table(title: str, rows: list[tuple[str, GroupStats]]) -> str:
    header = [title, *(MICRO_LABELS[k] for k in MICRO_KEYS), "C"]
    body = [
        [
            name,
            *(_fmt(stats.mean_scores[k]) for k in MICRO_KEYS),
            _fmt(stats.mean_chandassu),
        ]
        for name, stats in rows
    ]
    widths = [
        max(len(line[col]) for line in [header] + body)
        for col in range(len(header))
    ]
    def fmt_line(cells):
        first = cells[0].ljust(widths[0])
        rest = "  ".join(c.rjust(w) for c, w in zip(cells[1:], widths[1:]))
        return f"{first}  {rest}".rstrip()

    rule = "-" * (sum(widths) + 2 * (len(widths) - 1))
    return "\n".join([fmt_line(header), rule, *(fmt_line(b) for b in body)])


def render_class_table(summary: EvaluationSummary) -> str:
    return _render_table(
        "Prosodic Class",
        [(c, summary.per_class[c]) for c in CLASS_ORDER if c in summary.per_class],
    )


def render_type_table(summary: EvaluationSummary) -> str:
    return _render_table(
        "Padyam Type",
        [
            (t, summary.per_type[t])
            for t, _ in TYPE_ORDER
            if t in summary.per_type
        ],
    )


def summary_payload(summary: EvaluationSummary) -> dict:
    """JSON-ready structure for the machine-readable summary file."""

    def group(stats: GroupStats) -> dict:
        return {
            "count": stats.count,
            "scores": {k: stats.mean_scores[k] for k in MICRO_KEYS},
            "chandassu_score": stats.mean_chandassu,
        }

    return {
        "schema_version": 1,
        "total_records": summary.total,
        "failures": summary.failures,
        "overall": {
            "scores": {k: summary.overall_scores[k] for k in MICRO_KEYS},
            "chandassu_score": summary.overall_chandassu,
        },
        "per_class": {k: group(v) for k, v in summary.per_class.items()},
        "per_type": {k: group(v) for k, v in summary.per_type.items()},
        "per_satakam_counts": summary.per_satakam_counts,
    }


def write_per_record_csv(summary: EvaluationSummary, fh) -> None:
    """Per-record scores as a delimited file for downstream analysis."""
    writer = csv.writer(fh)
    writer.writerow(
        ["index", "type", "class", "satakam", *MICRO_KEYS, "chandassu_score", "error"]
    )
    for row in summary.per_record:
        writer.writerow(
            [
                row.index,
                row.type_name,
                row.class_name,
                row.satakam,
                *(row.scores.get(k, "") for k in MICRO_KEYS),
                row.chandassu_score,
                row.error or "",
            ]
        )
