#!/usr/bin/env python3
# Copyright 2026 The drinfeld-survey authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent recount of the survey report tables from a raw survey CSV.

Reads the per-prime CSV emitted by the `survey` subcommand and rebuilds the
density or growth table from scratch, using only the Python standard library.
Its output is compared byte-for-byte against the `tables` subcommand.
"""

import argparse
import csv
import math
import sys
from fractions import Fraction

HEADER = "q,x,p,a_p,mu_p,disc,b_max,b_p,c_p,delta_p,deg_delta_p,d1,d2,supersingular,j_bar"


def parse_f(text):
    """Threshold function f(x); mirrors the presets of the CLI's --f flag."""
    if text == "sqrt":
        return lambda x: math.sqrt(float(x))
    if text == "log2":
        return lambda x: math.log2(1.0 + float(x))
    if text.startswith("const:"):
        k = float(text[6:])
        if k < 0:
            raise ValueError("const threshold must be >= 0")
        return lambda x: k
    if text.startswith("linear:"):
        body = text[7:]
        num, _, den = body.partition("/")
        num, den = int(num), int(den) if den else 1
        if num <= 0 or den <= 0:
            raise ValueError("linear needs num, den > 0")
        return lambda x: float(x) * float(num) / float(den)
    raise ValueError(f"unknown f spec '{text}'")


def poly_deg(text):
    # Nonzero polynomials in "c0,c1,...,cd" form with cd != 0.
    return text.count(",")


def fraction_str(fr):
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"


def load(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        head = next(reader)
        if ",".join(head) != HEADER:
            raise ValueError("missing or unexpected header")
        records = []
        q = None
        for row in reader:
            if not row:
                continue
            if len(row) != 15:
                raise ValueError("bad field count")
            if q is None:
                q = int(row[0])
            elif int(row[0]) != q:
                raise ValueError("mixed q")
            records.append(row)
        return q, records


def build_rows(records, f):
    rows = {}
    for rec in records:
        x = int(rec[1])
        deg_bp = poly_deg(rec[7])
        deg_delta = int(rec[10])
        deg_d2 = poly_deg(rec[12])
        slack = 2 * deg_d2 - x
        row = rows.setdefault(
            x,
            {
                "x": x,
                "primes_total": 0,
                "count_bp_large": 0,
                "count_bp_one": 0,
                "min_deg_delta": deg_delta,
                "delta_sum": 0,
                "min_d2_slack": slack,
                "supersingular": 0,
            },
        )
        row["primes_total"] += 1
        if 2.0 * deg_bp >= f(x):
            row["count_bp_large"] += 1
        if rec[7] == "1":
            row["count_bp_one"] += 1
        if rec[13] == "1":
            row["supersingular"] += 1
        row["min_deg_delta"] = min(row["min_deg_delta"], deg_delta)
        row["min_d2_slack"] = min(row["min_d2_slack"], slack)
        row["delta_sum"] += deg_delta
    for row in rows.values():
        if row["min_d2_slack"] < 0:
            raise ValueError(f"negative d2 slack at x = {row['x']}")
    return [rows[x] for x in sorted(rows)]


def density_report(rows, q):
    out = [
        "x,primes_total,count_bp_large,count_bp_one,supersingular,frac_bp_large,"
        "dirichlet_s1.1,dirichlet_s1.5"
    ]
    num11 = den11 = num15 = den15 = 0.0
    for r in rows:
        w11 = math.pow(float(q), -1.1 * r["x"])
        w15 = math.pow(float(q), -1.5 * r["x"])
        num11 += w11 * float(r["count_bp_large"])
        den11 += w11 * float(r["primes_total"])
        num15 += w15 * float(r["count_bp_large"])
        den15 += w15 * float(r["primes_total"])
        frac = (
            Fraction(r["count_bp_large"], r["primes_total"])
            if r["primes_total"] > 0
            else Fraction(0)
        )
        d11 = num11 / den11 if den11 > 0 else 0.0
        d15 = num15 / den15 if den15 > 0 else 0.0
        out.append(
            f"{r['x']},{r['primes_total']},{r['count_bp_large']},{r['count_bp_one']},"
            f"{r['supersingular']},{fraction_str(frac)},{d11:.9f},{d15:.9f}"
        )
    return "\n".join(out) + "\n"


def growth_report(rows, q):
    out = ["x,min_deg_delta,mean_deg_delta,min_d2_slack,ref_delta,ref_d2"]
    logq = math.log(float(q))
    for r in rows:
        mean = Fraction(r["delta_sum"], r["primes_total"])
        lp = r["x"] * logq
        llp = math.log(lp)
        ref1 = (math.log(lp) - 2.0 * math.log(max(llp, 1e-9))) / logq
        ref2 = r["x"] / 2.0 + (0.5 * math.log(lp) - math.log(max(llp, 1e-9))) / logq
        out.append(
            f"{r['x']},{r['min_deg_delta']},{fraction_str(mean)},"
            f"{r['min_d2_slack']},{ref1:.6f},{ref2:.6f}"
        )
    return "\n".join(out) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--in", dest="inp", required=True, help="survey CSV input")
    ap.add_argument("--report", default="density", choices=["density", "growth"])
    ap.add_argument("--f", default="sqrt", help="threshold: const:k | sqrt | log2 | linear:num/den")
    args = ap.parse_args()

    q, records = load(args.inp)
    rows = build_rows(records, parse_f(args.f))
    if args.report == "density":
        sys.stdout.write(density_report(rows, q))
    else:
        sys.stdout.write(growth_report(rows, q))


if __name__ == "__main__":
    main()
