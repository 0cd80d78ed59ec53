#!/usr/bin/env python3
"""Generates the synthetic D08-style corridor fixture and its oracle scores.

The real per-segment inspection data behind the corridor case study is not
published. This script builds a plausible 24 km / 100 m corridor whose baseline
scores sit in the "highly likely" band for both automation groups, writes the
roadworks (km 11-17) and maintenance (km 3-16) overlays, and evaluates the
readiness formula with exact rational arithmetic for every segment and
scenario. The C++ test-suite compares against oracle_scores.csv.

Usage: make_d08_fixture.py <builtin_weights.csv> <out_dir>
"""
import csv
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

LENGTH_KM = 24
SEGMENT_M = 100
N_SEGMENTS = LENGTH_KM * 1000 // SEGMENT_M

ROADWORKS = {
    "name": "roadworks-km11-17",
    "from_km": 11.0,
    "to_km": 17.0,
    "ops": [
        {"op": "set", "attribute": "lane-mark-consistency", "value": 0},
        {"op": "set", "attribute": "lane-mark-retroreflectivity", "value": 0},
        {"op": "cap", "attribute": "lane-mark-contrast", "value": 1},
        {"op": "cap", "attribute": "lane-mark-maintenance", "value": 1},
        {"op": "cap", "attribute": "lane-width", "value": 1},
        {"op": "set", "attribute": "emergency-lane", "value": 0},
        {"op": "cap", "attribute": "horizontal-curvature", "value": 1},
        {"op": "cap", "attribute": "vertical-curvature", "value": 1},
    ],
}

MAINTENANCE = {
    "name": "poor-maintenance-km3-16",
    "from_km": 3.0,
    "to_km": 16.0,
    "ops": [
        {"op": "set", "attribute": "pavement-maintenance", "value": 0},
        {"op": "set", "attribute": "lane-mark-maintenance", "value": 0},
        {"op": "set", "attribute": "sign-maintenance", "value": 0},
        {"op": "set", "attribute": "vegetation-maintenance", "value": 0},
        {"op": "cap", "attribute": "lane-mark-retroreflectivity", "value": 1},
        {"op": "cap", "attribute": "lane-mark-contrast", "value": 1},
        {"op": "cap", "attribute": "sign-retroreflectivity", "value": 1},
        {"op": "set", "attribute": "guard-rail", "value": 0},
        {"op": "set", "attribute": "rumble-stripes", "value": 0},
        {"op": "cap", "attribute": "draining-pavement", "value": 1},
        {"op": "cap", "attribute": "lighting", "value": 1},
    ],
}


def load_weights(path):
    rows = [line for line in Path(path).read_text(encoding="utf-8").splitlines()
            if line.strip() and not line.lstrip().startswith("#")]
    return {r["attribute"]: (Fraction(r["asd_weight"]), Fraction(r["aud_weight"]))
            for r in csv.DictReader(rows)}


def score(values, weights, group):
    num = sum(weights[a][group] * v for a, v in values.items())
    den = sum(weights[a][group] * 2 for a in values)
    return 100 * num / den


def baseline_segment(rng, idx):
    v = {a: 2 for a in ATTRS}
    v["hd-maps"] = 0            # no preloaded HD map coverage
    v["dedicated-av-lane"] = 0  # no dedicated lane on this branch
    v["road-studs"] = 0
    v["lay-by"] = 1
    # Sections with tighter geometry and older equipment.
    km = idx / 10
    if 4.0 <= km < 6.5 or 18.5 <= km < 20.0:
        v["horizontal-curvature"] = 1
        v["vertical-curvature"] = 1
    if 8.0 <= km < 9.0 or 13.5 <= km < 14.5:   # viaducts without hard shoulder
        v["emergency-lane"] = 1
    for attr, p in (("lighting", 0.45), ("vegetation-maintenance", 0.25),
                    ("draining-pavement", 0.35), ("lane-width", 0.15),
                    ("lane-mark-contrast", 0.2), ("variable-message-signs", 0.3)):
        if rng.random() < p:
            v[attr] = 1
    return v


def apply_overlay(segments, overlay):
    out = []
    lo, hi = overlay["from_km"] * 1000, overlay["to_km"] * 1000
    for idx, v in enumerate(segments):
        start = idx * SEGMENT_M
        v = dict(v)
        if start < hi and start + SEGMENT_M > lo:
            for op in overlay["ops"]:
                if op["op"] == "set":
                    v[op["attribute"]] = op["value"]
                else:
                    v[op["attribute"]] = min(v[op["attribute"]], op["value"])
        out.append(v)
    return out


def main():
    global ATTRS
    weights = load_weights(sys.argv[1])
    ATTRS = list(weights)
    out = Path(sys.argv[2])
    (out / "overlays").mkdir(parents=True, exist_ok=True)

    rng = random.Random(8)
    baseline = [baseline_segment(rng, i) for i in range(N_SEGMENTS)]

    meta = {"corridor_id": "D08 Gallarate-Gattico (synthetic)", "length_km": LENGTH_KM,
            "segment_length_m": SEGMENT_M}
    with open(out / "baseline.csv", "w", newline="", encoding="utf-8") as f:
        f.write("#meta " + json.dumps(meta) + "\n")
        f.write("# SYNTHETIC fixture generated by tools/fixtures/make_d08_fixture.py; not survey or field data.\n")
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["segment_index", "attribute", "value"])
        for idx, v in enumerate(baseline):
            for a in ATTRS:
                w.writerow([idx, a, v[a]])

    for overlay, fname in ((ROADWORKS, "roadworks_km11_17.json"), (MAINTENANCE, "maintenance_km3_16.json")):
        (out / "overlays" / fname).write_text(json.dumps(overlay, indent=2) + "\n", encoding="utf-8")
    (out / "overlays" / "identity.json").write_text(
        json.dumps({"name": "identity", "from_km": 0.0, "to_km": 24.0, "ops": []}, indent=2) + "\n",
        encoding="utf-8")

    scenarios = {
        "baseline": baseline,
        "roadworks": apply_overlay(baseline, ROADWORKS),
        "maintenance": apply_overlay(baseline, MAINTENANCE),
    }
    with open(out / "oracle_scores.csv", "w", newline="", encoding="utf-8") as f:
        f.write("# Exact-rational readiness scores per scenario; generated by tools/fixtures/make_d08_fixture.py\n")
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["scenario", "segment_index", "asd_score", "aud_score"])
        for name, segs in scenarios.items():
            asd = [score(v, weights, 0) for v in segs]
            aud = [score(v, weights, 1) for v in segs]
            for i in range(N_SEGMENTS):
                w.writerow([name, i, repr(float(asd[i])), repr(float(aud[i]))])
            print(f"{name:12s} asd [{float(min(asd)):.2f}, {float(max(asd)):.2f}]"
                  f" aud [{float(min(aud)):.2f}, {float(max(aud)):.2f}]")
            if name == "roadworks":
                seg = range(110, 170)
                print("   overlaid aud<66:", sum(aud[i] < 66 for i in seg), "/ 60;",
                      "asd<66:", sum(asd[i] < 66 for i in seg))
            if name == "maintenance":
                seg = range(30, 160)
                print("   overlaid both<66:", sum(aud[i] < 66 and asd[i] < 66 for i in seg), "/ 130;",
                      "min", float(min(min(asd[i], aud[i]) for i in seg)))


if __name__ == "__main__":
    main()
