"""Regenerate src/sproutlab/data/expected_mismatches.json over the standard ranges.

Every entry is a documented disagreement between a printed closed form and
exact search; review the diff before committing a regenerated file.
"""

import json
import pathlib

from sproutlab.verify import allowlist_document, verify_family

STANDARD_RANGES = {
    "complete": (1, 10),
    "path": (2, 11),
    "cycle": (3, 11),
    "star": (1, 10),
    "bipartite": (2, 9),
    "wheel": (4, 10),
    "ladder": (3, 5),
}


def main():
    reports = []
    for family, (a, b) in STANDARD_RANGES.items():
        reports += verify_family(family, a, b, jobs=4)
    doc = allowlist_document(reports)
    doc["ranges"] = {k: list(v) for k, v in STANDARD_RANGES.items()}
    target = pathlib.Path(__file__).resolve().parents[1] / "src/sproutlab/data/expected_mismatches.json"
    target.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"{len(doc['entries'])} expected mismatches written to {target}")


if __name__ == "__main__":
    main()
