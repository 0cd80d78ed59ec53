#!/usr/bin/env python3
"""Constructive oracle for the survey fixtures.

Builds synthetic respondent panels whose per-(attribute, group) rating means
equal the committed built-in weights, and whose per-(region, day) C-ITS means
match the published regional values. Ratings are integers in {0, 1, 2}, so a
column answered by n respondents can only reach means k/n. Where a target is
not reachable with the panel size, the closest reachable fraction is used and
the column is listed in the report.

Usage: make_survey_fixture.py <builtin_weights.csv> <out_dir>
"""
import csv
import sys
from fractions import Fraction
from pathlib import Path

ROLES = ["Professor", "Postdoc", "PhD Student", "Technical Director", "Researcher",
         "R&D Manager", "Project Office"]

# Regional C-ITS day-service means (Day 1, Day 2, Day 3).
DAY_TARGETS = {
    "Europe": [Fraction("1.15"), Fraction("1.65"), Fraction("1.70")],
    "USA": [Fraction("1.33"), Fraction("1.00"), Fraction("0.33")],
}


def load_weights(path):
    rows = [line for line in Path(path).read_text(encoding="utf-8").splitlines()
            if line.strip() and not line.lstrip().startswith("#")]
    return [(r["attribute"], Fraction(r["asd_weight"]), Fraction(r["aud_weight"]))
            for r in csv.DictReader(rows)]


def best_fraction(target, max_n):
    """(n, k) with k/n closest to target; exact hits with the most raters win."""
    best = None
    for n in range(max_n, 0, -1):
        k = round(target * n)
        k = min(max(k, 0), 2 * n)
        err = abs(Fraction(k, n) - target)
        key = (err, -n)
        if best is None or key < best[0]:
            best = (key, n, k)
    return best[1], best[2]


def spread(n, k):
    """n ratings in {0,1,2} summing to k."""
    twos = max(0, k - n)
    ones = k - 2 * twos
    zeros = n - twos - ones
    return [2] * twos + [1] * ones + [0] * zeros


def build_panel(weights, n_resp, regions):
    ids = [f"R{i + 1:02d}" for i in range(n_resp)]
    ratings = []
    report = []
    for col, (attr, asd, aud) in enumerate(weights):
        for group, target in (("AsD", asd), ("AuD", aud)):
            n, k = best_fraction(target, n_resp)
            values = spread(n, k)
            offset = (3 * col + (group == "AuD")) % n_resp
            for j, v in enumerate(values):
                ratings.append((ids[(offset + j) % n_resp], attr, group, v))
            if Fraction(k, n) != target:
                report.append(f"{attr}/{group}: target {target} -> {k}/{n} = {float(Fraction(k, n)):.4f}")
    respondents = []
    by_region = {}
    for i, rid in enumerate(ids):
        by_region.setdefault(regions[i], []).append(i)
    day_values = {rid: ["", "", ""] for rid in ids}
    for region, members in by_region.items():
        targets = DAY_TARGETS.get(region)
        for day in range(3):
            if targets is None:
                for i in members:
                    day_values[ids[i]][day] = str((i + day) % 3)
                continue
            n, k = best_fraction(targets[day], len(members))
            values = spread(n, k)
            for j, v in enumerate(values):
                day_values[ids[members[(day + j) % len(members)]]][day] = str(v)
            if Fraction(k, n) != targets[day]:
                report.append(f"{region}/Day{day + 1}: target {targets[day]} -> {k}/{n} = {float(Fraction(k, n)):.4f}")
    for i, rid in enumerate(ids):
        respondents.append([rid, ROLES[i % len(ROLES)], regions[i], 1 + (i * 3) % 5, 1 + (i * 2 + 1) % 5,
                            *day_values[rid]])
    ratings.sort(key=lambda r: (r[0], r[1], r[2]))
    return ratings, respondents, report


def write(out_dir, stem, ratings, respondents, header_note):
    with open(out_dir / f"{stem}_ratings.csv", "w", newline="", encoding="utf-8") as f:
        f.write(f"# {header_note}\n")
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["respondent_id", "attribute", "group", "rating"])
        w.writerows(ratings)
    with open(out_dir / f"{stem}_respondents.csv", "w", newline="", encoding="utf-8") as f:
        f.write(f"# {header_note}\n")
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["respondent_id", "role", "region", "av_expertise", "cits_expertise", "day1", "day2", "day3"])
        w.writerows(respondents)


def main():
    weights = load_weights(sys.argv[1])
    out_dir = Path(sys.argv[2])
    out_dir.mkdir(parents=True, exist_ok=True)

    regions17 = ["Europe"] * 14 + ["USA"] * 3
    ratings, respondents, report = build_panel(weights, 17, regions17)
    write(out_dir, "panel17", ratings, respondents,
          "SYNTHETIC 17-respondent panel; generated by tools/fixtures/make_survey_fixture.py")
    print("panel17 unreachable targets:")
    for line in report:
        print("  " + line)

    regions20 = ["Europe"] * 10 + ["USA"] * 3 + ["Other"] * 7
    ratings, respondents, report = build_panel(weights, 20, regions20)
    write(out_dir, "panel20", ratings, respondents,
          "SYNTHETIC 20-respondent panel; generated by tools/fixtures/make_survey_fixture.py")
    print("panel20 unreachable targets:")
    for line in report:
        print("  " + line)


if __name__ == "__main__":
    main()
