#!/usr/bin/env python3
"""Runs `graphlab indices --n N` and compares every index with brute_force.py."""
import json
import subprocess
import sys
from fractions import Fraction

import brute_force


def cli_value(doc):
    kind = doc["kind"]
    if kind == "integer":
        return {1: Fraction(int(doc["value"]))}
    if kind == "rational":
        return {1: Fraction(int(doc["num"]), int(doc["den"]))}
    return {t["radicand"]: Fraction(int(t["num"]), int(t["den"])) for t in doc["terms"]}


def oracle_value(v):
    if isinstance(v, dict):
        return {d: c for d, c in v.items() if c != 0}
    value = Fraction(v)
    return {1: value} if value != 0 else {}


def main():
    binary = sys.argv[1]
    targets = [int(a) for a in sys.argv[2:]] or [1, 2, 4, 6, 8, 12, 18, 30, 36, 60, 72, 90, 210]
    failures = 0
    for n in targets:
        out = subprocess.run([binary, "indices", "--n", str(n)], check=True, capture_output=True, text=True).stdout
        got = json.loads(out)["indices"]
        expected = brute_force.indices(n)
        for name, doc in got.items():
            lhs = {d: c for d, c in cli_value(doc).items() if c != 0}
            rhs = oracle_value(expected[name])
            if lhs != rhs:
                failures += 1
                print(f"n={n} {name}: cli {lhs} != oracle {rhs}")
    print(f"{len(targets)} graphs, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
