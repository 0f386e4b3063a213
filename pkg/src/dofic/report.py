"""Report documents and their JSON / CSV / table renderings.

Rationals are kept exact in JSON as ``"p/q"`` strings (``"3"`` when
integral). CSV carries decimals rounded to 12 fractional digits with
trailing zeros trimmed.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable

from .classify import csi_comparison, describe, taxonomy_check
from .config import AntennaConfig, CsiRegime, canonicalize
from .polytope import BoundLabel, DofPoint, DofRegion, HalfPlaneBound, active_bounds
from .regions import region_for

_LABEL_ORDER = list(BoundLabel)


def frac(x) -> str:
    return str(Fraction(x))


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def decimal(x, digits: int = 12) -> str:
    x = Fraction(x)
    scaled = round(x * 10**digits)  # exact, ties to even
    sign = "-" if scaled < 0 else ""
    whole, part = divmod(abs(scaled), 10**digits)
    part = str(part).rjust(digits, "0").rstrip("0")
    return f"{sign}{whole}.{part}" if part else f"{sign}{whole}"


def point(p: DofPoint) -> list[str]:
    return [frac(p.d1), frac(p.d2)]


def labels(items: Iterable[BoundLabel]) -> list[str]:
    return [l.value for l in sorted(items, key=_LABEL_ORDER.index)]


def bound_doc(b: HalfPlaneBound) -> dict:
    return {"label": b.label.value, "a": frac(b.a), "b": frac(b.b), "c": frac(b.c)}


def bound_from_doc(doc: dict) -> HalfPlaneBound:
    return HalfPlaneBound(BoundLabel(doc["label"]), parse_frac(doc["a"]), parse_frac(doc["b"]), parse_frac(doc["c"]))


def config_doc(config: AntennaConfig) -> dict:
    return {"m1": config.m1, "m2": config.m2, "n1": config.n1, "n2": config.n2}


def region_doc(region: DofRegion) -> dict:
    return {
        "bounds": [bound_doc(b) for b in region.bounds],
        "active_bounds": labels(active_bounds(region)),
        "vertices": [point(v) for v in region.vertices],
        "flags": sorted(region.flags),
    }


def region_report(config: AntennaConfig, regime: CsiRegime | str) -> dict:
    regime = CsiRegime(regime)
    _, swapped = canonicalize(config)
    return {
        "config": config_doc(config),
        "regime": regime.value,
        "swapped": swapped,
        **region_doc(region_for(config, regime)),
    }


def _relations_summary(rel_no_d, rel_d_p) -> str:
    symbol = {"Equal": "=", "FirstStrictSubset": "⊂", "SecondStrictSubset": "⊃", "Incomparable": "?"}
    if rel_no_d.value == rel_d_p.value == "Equal":
        return "all regimes equal"
    return f"no {symbol[rel_no_d.value]} delayed {symbol[rel_d_p.value]} perfect"


def classify_report(config: AntennaConfig) -> dict:
    info = describe(config)
    canonical = info["canonical"]
    tax = taxonomy_check(canonical)
    cmp = csi_comparison(canonical)
    mirror = (lambda ls: {l.mirrored for l in ls}) if info["swapped"] else (lambda ls: ls)
    return {
        "config": config_doc(config),
        "canonical": config_doc(canonical),
        "swapped": info["swapped"],
        "case": info["case"].value,
        "active_bounds": {
            "computed": labels(mirror(tax.computed)),
            "expected": [labels(mirror(alt)) for alt in tax.expected],
            "matched": tax.ok,
        },
        "corners": {k.value: point(p) for k, p in info["corners"].items()},
        "comparison": {
            "computed": {
                "no_vs_delayed": cmp.no_vs_delayed.value,
                "delayed_vs_perfect": cmp.delayed_vs_perfect.value,
                "no_vs_perfect": cmp.no_vs_perfect.value,
            },
            "claimed": {"no_vs_delayed": cmp.claimed[0].value, "delayed_vs_perfect": cmp.claimed[1].value},
            "summary": _relations_summary(cmp.no_vs_delayed, cmp.delayed_vs_perfect),
            "claimed_summary": _relations_summary(*cmp.claimed),
            "agrees": cmp.agrees,
            "documented_deviation": cmp.documented_deviation,
            "flags": sorted(cmp.flags),
        },
    }


def simulation_doc(sim, swapped: bool = False) -> dict:
    dof = sim.dof.mirrored() if swapped else sim.dof
    scheme = sim.scheme
    return {
        "corner": scheme.corner,
        "T": scheme.T,
        "d_star": list(scheme.d_star[::-1] if swapped else scheme.d_star),
        "dof": point(dof),
        "field": sim.field,
        "passes": sim.passes,
        "trials": len(sim.trials),
        "verdicts": [
            {"trial": t.trial, "seed": list(t.seed), "passed": t.passed,
             "ranks": {str(r): list(v) for r, v in sorted(t.ranks.items())}}
            for t in sim.trials
        ],
        "phases": scheme.transcript(),
    }


def to_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def vertices_csv(vertices: Iterable[DofPoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d1", "d2"])
    for v in vertices:
        writer.writerow([decimal(v.d1), decimal(v.d2)])
    return buf.getvalue()


def region_table(doc: dict) -> str:
    lines = [f"config {tuple(doc['config'].values())}  regime {doc['regime']}"]
    for b in doc["bounds"]:
        star = "*" if b["label"] in doc["active_bounds"] else " "
        lines.append(f" {star} {b['label']:<4} {b['a']}*d1 + {b['b']}*d2 <= {b['c']}")
    lines.append("vertices: " + " ".join(f"({x},{y})" for x, y in doc["vertices"]))
    if doc["flags"]:
        lines.append("flags: " + ", ".join(doc["flags"]))
    return "\n".join(lines) + "\n"


def classify_table(doc: dict) -> str:
    act = doc["active_bounds"]
    cmp = doc["comparison"]
    expected = " or ".join("{" + ",".join(e) + "}" for e in act["expected"])
    corners = ", ".join(f"{k}=({x},{y})" for k, (x, y) in doc["corners"].items()) or "none"
    lines = [
        f"config {tuple(doc['config'].values())}  case {doc['case']}",
        f"active bounds: computed {{{','.join(act['computed'])}}}, table {expected}, "
        f"{'match' if act['matched'] else 'MISMATCH'}",
        f"corners: {corners}",
        f"regimes: {cmp['summary']} (claimed: {cmp['claimed_summary']})"
        + ("" if cmp["agrees"] else " [deviation" + (": " + ", ".join(cmp["flags"]) if cmp["flags"] else "") + "]"),
    ]
    return "\n".join(lines) + "\n"

