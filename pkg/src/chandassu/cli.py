"""Command-line interface.

Thin wrappers over the library: tokenize / lg / evaluate / detect read
text from a file or stdin (UTF-8, BOM stripped) and print either plain
text or the versioned structured JSON; benchmark and verify-lg drive the
corpus harness; serve runs the HTTP analysis service.

Exit codes: 0 success, 1 input errors, 2 config errors, 64 usage errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .corpus import (
    load_dataset,
    render_class_table,
    render_type_table,
    run_benchmark,
    summary_payload,
    verify_lg_annotations,
    write_per_record_csv,
)
from .errors import ConfigError, InputError
from .meter_config import list_types
from .padya_bhedam import evaluate, evaluate_auto
from .prosody import generate_lg, render_lg
from .report import analysis_payload, payload_json, render_report_text
from .tokenizer import tokenize_lines

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONFIG = 2
EXIT_USAGE = 64


def _read_text(input_path) -> str:
    if input_path in (None, "-"):
        data = sys.stdin.buffer.read()
        return data.decode("utf-8-sig")
    return Path(input_path).read_text(encoding="utf-8-sig")


input_option = click.option(
    "--input", "-i", "input_path", default=None,
    help="Input file (default: stdin).",
)
format_option = click.option(
    "--format", "-f", "output_format",
    type=click.Choice(["text", "structured"]), default="text",
    help="Plain text or versioned JSON.",
)
config_dir_option = click.option(
    "--config-dir", default=None,
    help="Meter config directory (default: CHANDASSU_CONFIG_DIR or packaged).",
)


@click.group()
def cli():
    """Metrical analysis of Telugu chandassu poetry."""


@cli.command("tokenize")
@input_option
@format_option
def tokenize_cmd(input_path, output_format):
    """Split text into aksharam tokens, one per line."""
    lines = tokenize_lines(_read_text(input_path))
    if output_format == "structured":
        click.echo(
            json.dumps(
                {"schema_version": 1, "lines": lines}, ensure_ascii=False
            )
        )
        return
    for index, line in enumerate(lines):
        if index:
            click.echo("")
        for token in line:
            click.echo(token)


@cli.command("lg")
@input_option
@format_option
def lg_cmd(input_path, output_format):
    """Weight every aksharam as laghuvu (|) or guruvu (U)."""
    annotated = generate_lg(_read_text(input_path))
    compact = render_lg(annotated)
    if output_format == "structured":
        click.echo(
            json.dumps(
                {
                    "schema_version": 1,
                    "tokens": [
                        {"token": a.token, "mark": a.mark} for a in annotated
                    ],
                    "lg": compact,
                },
                ensure_ascii=False,
            )
        )
        return
    for token, mark in annotated:
        click.echo(f"{token}\t{mark}")
    click.echo(compact)


@cli.command("evaluate")
@input_option
@format_option
@config_dir_option
@click.option("--type", "type_name", default=None, help="Padyam type to score against.")
def evaluate_cmd(input_path, output_format, config_dir, type_name):
    """Score a padyam against a meter (auto-detects without --type)."""
    text = _read_text(input_path)
    if type_name is None:
        click.echo("no --type given; auto-detecting the meter", err=True)
    if output_format == "structured":
        click.echo(
            payload_json(analysis_payload(text, type_name, config_dir)),
            nl=False,
        )
        return
    if type_name is None:
        _, report = evaluate_auto(text, config_dir)
    else:
        report = evaluate(text, type_name, config_dir)
    click.echo(render_report_text(report))


@cli.command("detect")
@input_option
@format_option
@config_dir_option
def detect_cmd(input_path, output_format, config_dir):
    """Find the best-fitting meter type and score it."""
    text = _read_text(input_path)
    if output_format == "structured":
        click.echo(payload_json(analysis_payload(text, None, config_dir)), nl=False)
        return
    detected, report = evaluate_auto(text, config_dir)
    click.echo(f"detected_type: {detected}")
    click.echo(render_report_text(report))


@cli.command("types")
@format_option
def types_cmd(output_format):
    """List the supported padyam types."""
    if output_format == "structured":
        click.echo(
            json.dumps(
                [
                    {"type_name": t, "class_name": c}
                    for t, c in list_types()
                ],
                ensure_ascii=False,
            )
        )
        return
    for type_name, class_name in list_types():
        click.echo(f"{type_name}\t{class_name}")


@cli.command("benchmark")
@config_dir_option
@click.option("--dataset", required=True, help="Dataset file or directory.")
@click.option("--out", "out_dir", default=None, help="Directory for report files.")
@click.option("--workers", default=1, show_default=True, help="Parallel evaluation processes.")
def benchmark_cmd(config_dir, dataset, out_dir, workers):
    """Evaluate a whole dataset and print class/type score tables."""
    row_errors: list = []
    records = load_dataset(dataset, error_sink=row_errors)
    summary = run_benchmark(records, config_dir, workers=workers)

    click.echo(render_class_table(summary))
    click.echo("")
    click.echo(render_type_table(summary))
    click.echo("")
    click.echo(f"records: {summary.total}")
    click.echo(f"overall chandassu score: {100 * summary.overall_chandassu:.2f}")
    if summary.failures:
        click.echo(f"records scored 0 due to errors: {summary.failures}", err=True)
    for err in row_errors:
        click.echo(f"skipped malformed {err}", err=True)

    if out_dir:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "summary.json").write_text(
            json.dumps(summary_payload(summary), ensure_ascii=False, indent=2)
            + "\n",
            encoding="utf-8",
        )
        with open(out / "records.csv", "w", newline="", encoding="utf-8") as fh:
            write_per_record_csv(summary, fh)
        (out / "tables.txt").write_text(
            render_class_table(summary) + "\n\n" + render_type_table(summary) + "\n",
            encoding="utf-8",
        )


@cli.command("verify-lg")
@click.option("--dataset", required=True, help="Dataset file or directory.")
@format_option
def verify_lg_cmd(dataset, output_format):
    """Compare generated LG sequences with the dataset's annotations."""
    row_errors: list = []
    records = load_dataset(dataset, error_sink=row_errors)
    report = verify_lg_annotations(records)
    if output_format == "structured":
        click.echo(
            json.dumps(
                {
                    "schema_version": 1,
                    "records_checked": report.records_checked,
                    "total_tokens": report.total_tokens,
                    "agreeing_tokens": report.agreeing_tokens,
                    "agreement": report.agreement,
                    "disagreements": [
                        {
                            "record": d.record_index,
                            "token": d.token_index,
                            "generated": d.generated,
                            "annotated": d.annotated,
                        }
                        for d in report.disagreements
                    ],
                    "record_errors": [
                        {"record": i, "error": msg}
                        for i, msg in report.record_errors
                    ],
                },
                ensure_ascii=False,
            )
        )
        return
    click.echo(f"records checked: {report.records_checked}")
    click.echo(f"token agreement: {100 * report.agreement:.2f}% "
               f"({report.agreeing_tokens}/{report.total_tokens})")
    for d in report.disagreements:
        click.echo(
            f"record {d.record_index} token {d.token_index}: "
            f"generated {d.generated} annotated {d.annotated}"
        )
    for index, msg in report.record_errors:
        click.echo(f"record {index} failed: {msg}", err=True)


@cli.command("serve")
@config_dir_option
@click.option(
    "--host", default=None,
    help="Bind address (default: CHANDASSU_HOST or 127.0.0.1).",
)
@click.option(
    "--port", default=None, type=int,
    help="Port (default: CHANDASSU_PORT or 8000).",
)
def serve_cmd(config_dir, host, port):
    """Run the HTTP analysis service."""
    import os

    import uvicorn

    from .service import create_app

    if host is None:
        host = os.environ.get("CHANDASSU_HOST", "127.0.0.1")
    if port is None:
        port = int(os.environ.get("CHANDASSU_PORT", "8000"))
    uvicorn.run(create_app(config_dir), host=host, port=port)


def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_INPUT
    except (InputError, OSError, UnicodeDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
