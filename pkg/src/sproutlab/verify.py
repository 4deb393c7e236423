"""Cross-check the closed-form family expressions against exact search."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from importlib import resources

from . import formulas as F
from .config import order_cap, parallel_map
from .graph import make_family
from .solvers import brute_force_extrema, extrema_by_index

MATCH, MISMATCH, UNCHECKED = "match", "mismatch", "unchecked"

VERIFY_FAMILIES = ("complete", "path", "cycle", "star", "bipartite", "wheel", "ladder")
FAMILY_MINIMUM = {
    "complete": 1,
    "path": 2,
    "cycle": 3,
    "star": 1,
    "bipartite": 2,
    "wheel": 4,
    "ladder": 3,
}


@dataclass(frozen=True)
class FormulaReport:
    family: str
    params: tuple
    quantity: str
    formula_value: object
    oracle_value: object
    verdict: str
    paper_ref: str

    def key(self) -> tuple:
        return (self.family, self.quantity, self.params)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": list(self.params),
            "quantity": self.quantity,
            "formula": _jsonable(self.formula_value),
            "oracle": _jsonable(self.oracle_value),
            "verdict": self.verdict,
            "paper_ref": self.paper_ref,
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    return x


def _verdict(formula, oracle) -> str:
    if formula is None or oracle is None:
        return UNCHECKED
    return MATCH if formula == oracle else MISMATCH


def _report(family, params, quantity, formula, oracle, ref):
    return FormulaReport(family, tuple(params), quantity, formula, oracle, _verdict(formula, oracle), ref)


def _family_graph(family, params):
    name = "complete_bipartite" if family == "bipartite" else family
    return make_family(name, *params)


def _oracle(g, cap, force_large):
    if g.order > order_cap(cap) and not force_large:
        return None
    return brute_force_extrema(g, cap, force_large)


def _reports_for(params, family, cap, force_large) -> list:
    g = _family_graph(family, params)
    ext = _oracle(g, cap, force_large)
    lo = ext.min_value if ext else None
    hi = ext.max_value if ext else None
    out = []
    if family == "complete":
        (n,) = params
        value = F.complete_mw(n)
        ref = "complete-graph constant"
        out += [_report(family, params, "min", value, lo, ref), _report(family, params, "max", value, hi, ref)]
    elif family == "path":
        (n,) = params
        ref = "path extrema"
        out += [
            _report(family, params, "min", F.path_min(n), lo, ref),
            _report(family, params, "max", F.path_max_paper(n), hi, ref),
        ]
    elif family == "cycle":
        (n,) = params
        ref = "cycle extrema"
        out += [
            _report(family, params, "min", F.cycle_min(n), lo, ref),
            _report(family, params, "max", F.cycle_max_paper(n), hi, ref),
        ]
    elif family == "star":
        (n,) = params
        ref = "star extrema"
        out += [
            _report(family, params, "min", F.star_min(n), lo, ref),
            _report(family, params, "max", F.star_max(n), hi, ref),
        ]
        centers_min = centers_max = None
        if ext is not None:
            by_index = extrema_by_index(g, 1, cap, force_large)
            centers_min = sorted(i for i, (a, _) in by_index.items() if a == lo)
            centers_max = sorted(i for i, (_, b) in by_index.items() if b == hi)
        cref = "star center index"
        out += [
            _report(family, params, "min_center", sorted(F.star_center_indices(n, "min")), centers_min, cref),
            _report(family, params, "max_center", sorted(F.star_center_indices(n, "max")), centers_max, cref),
        ]
    elif family == "bipartite":
        n, m = params
        ref = "complete bipartite extrema"
        lref = "complete bipartite proof labelings"
        out += [
            _report(family, params, "min", F.bipartite_min_paper(n, m), lo, ref),
            _report(family, params, "min_labeling", F.bipartite_labeling_value(n, m, "min"), lo, lref),
            _report(family, params, "max_a", F.bipartite_max_paper(n, m, "a"), hi, ref),
            _report(family, params, "max_b", F.bipartite_max_paper(n, m, "b"), hi, ref),
            _report(family, params, "max_labeling", F.bipartite_labeling_value(n, m, "max"), hi, lref),
        ]
    elif family == "wheel":
        (n,) = params
        ref = "wheel extrema"
        out += [
            _report(family, params, "min", F.wheel_min_paper(n), lo, ref),
            _report(family, params, "max", F.wheel_max_paper(n), hi, ref),
        ]
    elif family == "ladder":
        (n,) = params
        out += [
            _report(family, params, "min", F.ladder_min_paper(n), lo, "ladder minimum"),
            _report(family, params, "max", None, hi, "ladder maximum (open)"),
        ]
    else:
        raise ValueError(f"no formulas for family {family!r}")
    return out


def family_params(family: str, start: int, stop: int) -> list:
    """Parameter tuples for ``start..stop`` (inclusive), clipped to the family minimum."""
    if family not in FAMILY_MINIMUM:
        raise ValueError(f"unknown family {family!r}; choose from {list(VERIFY_FAMILIES)}")
    lo = max(start, FAMILY_MINIMUM[family])
    if family == "bipartite":
        return [(n, m) for n in range(lo, stop + 1) for m in range(lo, stop + 1)]
    return [(n,) for n in range(lo, stop + 1)]


def verify_family(family, start, stop, cap=None, force_large=False, jobs=1) -> list:
    """One report per (parameter, quantity), ordered by parameter then quantity."""
    params = family_params(family, start, stop)
    run = partial(_reports_for, family=family, cap=cap, force_large=force_large)
    return [r for chunk in parallel_map(run, params, jobs) for r in chunk]


# ---------------------------------------------------------------------------
# expected-mismatch allowlist


def load_allowlist(path=None) -> set:
    if path is None:
        text = resources.files("sproutlab").joinpath("data/expected_mismatches.json").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    return {(e["family"], e["quantity"], tuple(e["params"])) for e in data["entries"]}


def classify(reports, allowlist) -> dict:
    """Split mismatches into expected and unexpected; flag allowlisted rows that now match."""
    expected, unexpected, stale = [], [], []
    for r in reports:
        listed = r.key() in allowlist
        if r.verdict == MISMATCH:
            (expected if listed else unexpected).append(r)
        elif r.verdict == MATCH and listed:
            stale.append(r)
    return {"expected": expected, "unexpected": unexpected, "stale": stale}


def allowlist_document(reports) -> dict:
    entries = [
        {"family": r.family, "quantity": r.quantity, "params": list(r.params)}
        for r in reports
        if r.verdict == MISMATCH
    ]
    return {"version": 1, "entries": entries}


# ---------------------------------------------------------------------------
# rendering


def render_reports(reports, fmt="text") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "params", "quantity", "formula", "oracle", "verdict", "paper_ref"])
        for r in reports:
            d = r.to_dict()
            w.writerow([
                d["family"],
                " ".join(map(str, d["params"])),
                d["quantity"],
                "" if d["formula"] is None else d["formula"],
                "" if d["oracle"] is None else d["oracle"],
                d["verdict"],
                d["paper_ref"],
            ])
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unsupported format {fmt!r}")
    rows = [("family", "params", "quantity", "formula", "oracle", "verdict")]
    for r in reports:
        d = r.to_dict()
        flag = "  <-- MISMATCH" if r.verdict == MISMATCH else ""
        rows.append((
            d["family"],
            ",".join(map(str, d["params"])),
            d["quantity"],
            "-" if d["formula"] is None else str(d["formula"]),
            "-" if d["oracle"] is None else str(d["oracle"]),
            d["verdict"] + flag,
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row[:5], widths)) + "  " + row[5] for row in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"
