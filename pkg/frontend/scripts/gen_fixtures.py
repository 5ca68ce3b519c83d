#!/usr/bin/env python3
"""Generate UI test fixtures through the analysis engine.

Produces tests/fixtures/analyses.json with fifty analysis payloads
(perfect and perturbed padyams across all eight types), one fixture with
exactly one flipped syllable (so exactly one ganam cell is unmatched),
and the /types constraint summary. Run from the frontend directory:

    python scripts/gen_fixtures.py
"""

import json
from pathlib import Path

from chandassu.meter_config import TYPE_ORDER, load_config
from chandassu.report import analysis_payload
from chandassu.synth import GURUVU_TOKEN, LAGHUVU_TOKEN, perfect_padyam

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "analyses.json"


def flip_token(text: str, index: int) -> str:
    """Swap the weight of one synthetic token (తి <-> తీ)."""
    tokens = [text[i : i + 2] for i in range(0, len(text), 2)]
    tokens[index] = (
        GURUVU_TOKEN if tokens[index] == LAGHUVU_TOKEN else LAGHUVU_TOKEN
    )
    return "".join(tokens)


def main() -> None:
    samples = []
    type_names = [t for t, _ in TYPE_ORDER]
    i = 0
    while len(samples) < 50:
        type_name = type_names[i % len(type_names)]
        text = perfect_padyam(type_name)
        if i % 3 == 1:  # drop the last line
            text = "\n".join(text.split("\n")[:-1])
        elif i % 3 == 2:  # flip a mid-line syllable
            lines = text.split("\n")
            lines[1] = flip_token(lines[1], 4)
            text = "\n".join(lines)
        samples.append(
            {"text": text, "response": analysis_payload(text, type_name)}
        )
        i += 1

    flipped_text = perfect_padyam("vutpalamaala").split("\n")
    flipped_text[0] = flip_token(flipped_text[0], 0)
    flipped_text = "\n".join(flipped_text)
    flipped = {
        "text": flipped_text,
        "response": analysis_payload(flipped_text, "vutpalamaala"),
    }
    unmatched = sum(
        1
        for row in flipped["response"]["ganam_cells"]
        for cell in row
        if cell["matched_name"] == "UnMatched"
    )
    assert unmatched == 1, f"expected exactly one unmatched cell, got {unmatched}"

    types = []
    for type_name, class_name in TYPE_ORDER:
        config = load_config(type_name)
        types.append(
            {
                "type_name": type_name,
                "class_name": class_name,
                "n_paadalu": config.n_paadalu,
                "n_aksharalu": config.n_aksharalu,
                "prasa": config.prasa,
                "yati_sthanam": list(config.yati_sthanam),
                "yati_paadalu": list(config.yati_paadalu),
                "applicable_scores": config.applicable_scores(),
            }
        )

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(
        json.dumps(
            {"samples": samples, "flipped": flipped, "types": types},
            ensure_ascii=False,
            indent=1,
        ),
        encoding="utf-8",
    )
    print(f"wrote {OUT} ({len(samples)} samples)")


if __name__ == "__main__":
    main()
