"""Regenerate findings/pattern_conjecture_n5.json: the exhaustive timeline-inclusion sweep for n <= 5."""

import json
import pathlib

from sproutlab.lab import hunt_all_connected

MAX_N = 5


def main():
    sweeps = {str(n): hunt_all_connected(n, jobs=4).to_dict() for n in range(1, MAX_N + 1)}
    target = pathlib.Path(__file__).resolve().parents[1] / "findings/pattern_conjecture_n5.json"
    target.parent.mkdir(exist_ok=True)
    target.write_text(json.dumps({"claim": "pattern-conjecture", "sweeps": sweeps}, separators=(",", ":")) + "\n")
    for n, s in sweeps.items():
        print(f"n={n}: {s['graphs_checked']} graphs, {s['violating_graphs']} violating, {s['record_count']} records")


if __name__ == "__main__":
    main()
