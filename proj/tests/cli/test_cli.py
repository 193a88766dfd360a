#!/usr/bin/env python3
"""End-to-end checks of the dsnkit command line: exit codes, JSON schemas,
determinism and the reduction decision on the shipped patterns."""

import argparse
import json
import os
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

import jsonschema

EXIT_OK, EXIT_INPUT, EXIT_NO_SOLUTION, EXIT_CAPACITY, EXIT_DOMAIN = 0, 1, 2, 3, 4


class Cli:
    def __init__(self, binary, schemas):
        self.binary = binary
        self.schemas = {}
        for path in Path(schemas).glob("*.schema.json"):
            schema = json.loads(path.read_text())
            jsonschema.Draft202012Validator.check_schema(schema)
            self.schemas[path.name.split(".")[0]] = schema

    def run(self, *args):
        return subprocess.run([self.binary, *map(str, args)], capture_output=True, text=True, timeout=300)

    def json(self, *args, expect_code=EXIT_OK):
        proc = self.run("--json", *args)
        check(proc.returncode == expect_code,
              f"{' '.join(map(str, args))}: exit {proc.returncode}, wanted {expect_code}\n{proc.stderr}")
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, self.schemas[doc["kind"]])
        return doc


failures = []


def check(ok, message):
    if not ok:
        raise AssertionError(message)


def case(fn):
    fn.is_case = True
    return fn


@case
def golden_solves_match_frozen_optima(cli, data, patterns, tmp):
    expected = {}
    for line in (data / "golden" / "expected.txt").read_text().splitlines():
        if line and not line.startswith("#"):
            name, value = line.split()
            expected[name] = value
    for path in sorted((data / "golden").glob("*.dsn")):
        want = expected[path.stem]
        code = EXIT_NO_SOLUTION if want == "infeasible" else EXIT_OK
        doc = cli.json("solve", path, expect_code=code)
        if want == "infeasible":
            check(doc["status"] == "infeasible", f"{path.name}: {doc['status']}")
            check(doc["cost"] is None, f"{path.name}: cost on infeasible")
        else:
            check(Fraction(doc["cost"]) == Fraction(want), f"{path.name}: {doc['cost']} != {want}")
            check(doc["instance"]["digest"], "digest missing")


@case
def engines_agree_on_small_instance(cli, data, patterns, tmp):
    path = data / "golden" / "outstar_8_16_s4.dsn"
    costs = {cli.json("solve", path, "--engine", e)["cost"] for e in ("exhaustive", "bnb", "dst")}
    check(len(costs) == 1, f"engines disagree: {costs}")


@case
def cutoff_below_optimum_exits_two(cli, data, patterns, tmp):
    doc = cli.json("solve", data / "golden" / "random_7_16_s7.dsn", "--cutoff", "4", expect_code=EXIT_NO_SOLUTION)
    check(doc["status"] == "above_cutoff", doc["status"])
    check(cli.json("solve", data / "golden" / "random_7_16_s7.dsn", "--cutoff", "5")["cost"] == "5/1", "cutoff 5")


@case
def certify_stamps_genus(cli, data, patterns, tmp):
    doc = cli.json("solve", "--certify", data / "golden" / "grid_3x2_s9.dsn")
    check(doc["certificate"]["genus"] == 0, "genus lost")
    check(not doc["certificate"]["treewidth_increased"], "treewidth increased")


@case
def analyze_reports_every_path(cli, data, patterns, tmp):
    doc = cli.json("analyze", data / "golden" / "demo_3.dsn")
    check(len(doc["structure"]["paths"]) == len(doc["structure"]["normalized_requests"]), "path count")
    for p in doc["structure"]["paths"]:
        check(not p["checks"]["failures"], f"lemma failures {p['checks']['failures']}")


@case
def analyze_infeasible_exits_two(cli, data, patterns, tmp):
    path = data / "golden" / "infeasible_one_way.dsn"
    for extra in ((), ("--solve", "bnb")):
        doc = cli.json("analyze", path, *extra, expect_code=EXIT_NO_SOLUTION)
        check(doc["error"]["type"] == "infeasible", doc["error"]["type"])
    proc = cli.run("solve", path)
    check(proc.returncode == EXIT_NO_SOLUTION and "infeasible" in proc.stdout, proc.stdout)


@case
def parse_error_names_line_and_column(cli, data, patterns, tmp):
    bad = tmp / "bad.dsn"
    bad.write_text("p dsn 2 1 2 1\na 1 2 0\nr 1 2\n")
    doc = cli.json("solve", bad, expect_code=EXIT_INPUT)
    check(doc["error"]["type"] == "parse", doc["error"]["type"])
    check((doc["error"]["line"], doc["error"]["column"]) == (2, 7), str(doc["error"]))
    proc = cli.run("solve", bad)
    check(proc.returncode == EXIT_INPUT and "line 2, column 7" in proc.stderr, proc.stderr)
    doc = cli.json("solve", tmp / "missing.dsn", expect_code=EXIT_INPUT)
    check(doc["error"]["type"] == "input", doc["error"]["type"])


@case
def exhaustive_cap_exits_three(cli, data, patterns, tmp):
    grid = tmp / "grid.dsn"
    cli.json("gen", "grid", 4, 4, "--seed", 3, "-o", grid)
    doc = cli.json("solve", grid, "--engine", "exhaustive", expect_code=EXIT_CAPACITY)
    check(doc["error"]["type"] == "capacity", doc["error"]["type"])


@case
def dst_on_non_star_exits_four(cli, data, patterns, tmp):
    doc = cli.json("solve", data / "golden" / "ladder_4.dsn", "--engine", "dst", expect_code=EXIT_DOMAIN)
    check(doc["error"]["type"] == "domain", doc["error"]["type"])


@case
def degree_four_pattern_exits_four(cli, data, patterns, tmp):
    k5 = tmp / "k5.psi"
    edges = [(u, v) for u in range(1, 6) for v in range(u + 1, 6)]
    lines = [f"p psi 5 {len(edges)} 5 {len(edges)}"]
    lines += [f"eg {u} {v}" for u, v in edges] + [f"eh {u} {v}" for u, v in edges]
    lines += [f"map {v} {v}" for v in range(1, 6)]
    k5.write_text("\n".join(lines) + "\n")
    doc = cli.json("reduce", k5, expect_code=EXIT_DOMAIN)
    check("degree 3" in doc["error"]["message"], doc["error"]["message"])


@case
def k4_reduction_decides_yes_at_threshold(cli, data, patterns, tmp):
    proc = cli.run("reduce", patterns / "k4.psi", "--decide")
    check(proc.returncode == EXIT_OK, proc.stderr)
    check(proc.stdout.splitlines()[0] == "yes, cost 26 = threshold 26", proc.stdout)
    out = tmp / "k4.dsn"
    doc = cli.json("reduce", patterns / "k4.psi", "-o", out)
    check(doc["threshold"] == "26/1" and doc["requests"] == 16, str(doc))
    check("c threshold 26/1" in out.read_text(), "threshold metadata missing")
    check(cli.json("solve", out)["cost"] == "26/1", "reduced instance optimum")


@case
def every_shipped_pattern_embeds_in_itself(cli, data, patterns, tmp):
    for path in sorted(patterns.glob("*.psi")):
        doc = cli.json("reduce", path, "--decide")
        k, edges = doc["k"], doc["pattern_edges"]
        check(doc["decision"]["answer"] == "yes", path.name)
        check(Fraction(doc["decision"]["cost"]) == 2 * k + 3 * edges, f"{path.name}: {doc['decision']['cost']}")
        check(doc["decision"]["embedding"] == list(range(1, k + 1)), path.name)


@case
def gen_is_byte_deterministic(cli, data, patterns, tmp):
    runs = [
        ("random", 8, 16, 3, 3, "--seed", 5, "--fractional"),
        ("outstar", 9, 18, 3, "--seed", 2),
        ("grid", 3, 3, "--seed", 4),
        ("ladder", 7, "--identify", "2,5"),
        ("demo", 9),
        ("psi", 10, "--pattern", "cube", "--seed", 8, "--plant"),
    ]
    for args in runs:
        first, second = cli.run("gen", *args), cli.run("gen", *args)
        check(first.returncode == EXIT_OK, first.stderr)
        check(first.stdout == second.stdout and first.stdout, f"gen {args} not deterministic")
        doc = cli.json("gen", *args)
        check(doc["text"] == first.stdout, f"gen {args}: json text differs")
    a = cli.run("gen", "random", 8, 16, 3, 3, "--seed", 5).stdout
    b = cli.run("gen", "random", 8, 16, 3, 3, "--seed", 6).stdout
    check(a != b, "seed ignored")
    check("c seed 5" in a, "seed not embedded")


@case
def gen_output_round_trips_through_solve(cli, data, patterns, tmp):
    path = tmp / "r.dsn"
    cli.json("gen", "random", 7, 14, 3, 3, "--seed", 11, "-o", path)
    proc = cli.run("--json", "solve", path)
    check(proc.returncode in (EXIT_OK, EXIT_NO_SOLUTION), proc.stderr)
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, cli.schemas["solve"])
    check(doc["instance"]["seed"] == 11, "seed not in report")


@case
def bench_quick_agrees(cli, data, patterns, tmp):
    doc = cli.json("bench", "--quick")
    check(doc["all_agree"], "bench rows disagree")
    names = [r["instance"] for r in doc["rows"]]
    check(names == sorted(names), "rows not ordered by instance name")


@case
def usage_errors_exit_one(cli, data, patterns, tmp):
    check(cli.run("solve").returncode == EXIT_INPUT, "missing file argument")
    check(cli.run("gen", "grid", 3).returncode == EXIT_INPUT, "wrong size count")
    check(cli.run("solve", data / "golden" / "ladder_4.dsn", "--engine", "simplex").returncode == EXIT_INPUT,
          "unknown engine")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--binary", required=True)
    parser.add_argument("--schemas", required=True)
    parser.add_argument("--data", required=True)
    parser.add_argument("--patterns", required=True)
    args = parser.parse_args()
    cli = Cli(args.binary, args.schemas)
    cases = [fn for fn in globals().values() if getattr(fn, "is_case", False)]
    failed = 0
    with tempfile.TemporaryDirectory() as tmp:
        for fn in cases:
            try:
                fn(cli, Path(args.data), Path(args.patterns), Path(tmp))
                print(f"ok   {fn.__name__}")
            except Exception as e:  # report and keep going
                failed += 1
                print(f"FAIL {fn.__name__}: {type(e).__name__}: {e}")
    print(f"{len(cases) - failed} of {len(cases)} cli cases passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
