"""Shared fixtures: synthetic records and dataset discovery.

The published corpus is not bundled; tests that need it look for a path
in the CHANDASSU_DATASET environment variable, falling back to a ``data``
directory in the repo root, and skip with an explicit reason when neither
exists. Everything else runs on synthesized padyams.
"""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from chandassu.corpus import PadyamRecord, save_dataset
from chandassu.meter_config import CLASS_OF_TYPE, TYPE_ORDER
from chandassu.prosody import generate_lg, render_lg
from chandassu.synth import perfect_padyam

DATASET_ENV = "CHANDASSU_DATASET"
REPO_ROOT = Path(__file__).resolve().parent.parent


def find_dataset() -> Path | None:
    env = os.environ.get(DATASET_ENV)
    if env:
        path = Path(env)
        if path.exists():
            return path
    fallback = REPO_ROOT / "data"
    if fallback.exists() and any(
        p.suffix.lower() in (".csv", ".json", ".jsonl")
        for p in fallback.iterdir()
        if p.is_file()
    ):
        return fallback
    return None


def require_dataset() -> Path:
    path = find_dataset()
    if path is None:
        pytest.skip(
            "published 4,651-padyam dataset not available in this "
            f"environment (set {DATASET_ENV} or place files under data/); "
            "network access here is limited to package mirrors"
        )
    return path


def make_record(type_name: str, index: int = 0) -> PadyamRecord:
    """One synthetic, fully valid record with its own LG annotation."""
    padyam = perfect_padyam(type_name)
    return PadyamRecord(
        type_name=type_name,
        padyam=padyam,
        class_name=CLASS_OF_TYPE[type_name],
        satakam=f"synthetic-{index % 3}",
        lg=render_lg(generate_lg(padyam)),
    )


@pytest.fixture
def synthetic_records() -> list[PadyamRecord]:
    """Three perfect records of every type."""
    return [
        make_record(type_name, i)
        for type_name, _ in TYPE_ORDER
        for i in range(3)
    ]


@pytest.fixture
def synthetic_dataset_dir(tmp_path, synthetic_records) -> Path:
    dataset = tmp_path / "dataset"
    dataset.mkdir()
    save_dataset(synthetic_records, dataset / "padyams.jsonl")
    return dataset
