#!/usr/bin/env python3
"""End-to-end checks of the tempex command line tool.

Usage: cli_driver.py <path-to-binary>
"""

import csv
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
CHECKS = 0


def run(*args, expect=0, env=None):
    global CHECKS
    CHECKS += 1
    full_env = dict(os.environ, **env) if env else None
    proc = subprocess.run([BIN, *args], capture_output=True, text=True,
                          env=full_env)
    assert proc.returncode == expect, (
        f"{args}: exit {proc.returncode}, expected {expect}\n"
        f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
    )
    return proc


def check(cond, what):
    global CHECKS
    CHECKS += 1
    assert cond, what


def main():
    work = Path(tempfile.mkdtemp(prefix="tempex-cli-"))

    # gen + validate + oracle on the tight cycle family
    tight = work / "tight5.json"
    run("gen", "--family", "cycle-tight", "--n", "5", "--out", str(tight))
    run("validate", str(tight))
    proc = run("oracle", str(tight), "--unique")
    check(proc.stdout.strip() == "true,7,7,true", f"oracle says {proc.stdout!r}")
    proc = run("oracle", str(tight), "--objective", "min-arrival")
    check(proc.stdout.strip() == "true,7,7", f"oracle says {proc.stdout!r}")

    # deterministic generation: same seed, same bytes
    a, b = work / "a.json", work / "b.json"
    for out in (a, b):
        run("gen", "--family", "random", "--n", "6", "--L", "9", "--seed", "3",
            "--density", "0.4", "--out", str(out))
    check(a.read_bytes() == b.read_bytes(), "same seed produced different files")

    # validate failure modes
    run("validate", str(work / "missing.json"), expect=2)
    broken = work / "broken.json"
    broken.write_text('{"version":1,"n":3,"L":1,"snapshots":[[[0,1]]]}')
    proc = run("validate", str(broken), expect=1)
    check("disconnected" in proc.stderr, proc.stderr)
    garbled = work / "garbled.json"
    garbled.write_text("{nope")
    run("validate", str(garbled), expect=2)

    # explore the missing-antipode cycle and check the journey document
    missing = work / "missing5.json"
    run("gen", "--family", "cycle-missing-m", "--n", "5", "--out", str(missing))
    journey_path = work / "journey.json"
    proc = run("explore", str(missing), "--algo", "cycle", "--start", "0",
               "--out", str(journey_path))
    algo, n, lifetime, edges, arrival, complete = proc.stdout.strip().split(",")
    check(algo == "cycle" and n == "5" and lifetime == "8", proc.stdout)
    check(int(edges) == 6 and complete == "true", proc.stdout)
    check(int(arrival) <= 8, proc.stdout)
    journey = json.loads(journey_path.read_text())
    check(journey["start"] == 0, "journey start")
    check(len(journey["steps"]) == 6, "journey steps")
    check(all(set(s) == {"t", "from", "to"} for s in journey["steps"]),
          "journey step keys")

    # usage and precondition errors
    run("explore", str(missing), "--algo", "diameter", expect=2)
    proc = run("explore", str(missing), "--algo", "general", expect=3)
    check("3375" in proc.stderr, proc.stderr)  # ceil(12*5^3.5) + 20

    # oracle capacity guard, and the state-budget override
    big = work / "big.json"
    run("gen", "--family", "random", "--n", "21", "--L", "1", "--seed", "0",
        "--density", "0", "--out", str(big))
    run("oracle", str(big), expect=4)
    run("oracle", str(tight), expect=4,
        env={"TEMPEX_ORACLE_STATE_BUDGET": "10"})
    run("oracle", str(tight), expect=0,
        env={"TEMPEX_ORACLE_STATE_BUDGET": "1000000"})

    # infeasible instance: tight family truncated to one step
    doc = json.loads(tight.read_text())
    doc["L"] = 1
    doc["snapshots"] = doc["snapshots"][:1]
    short = work / "short.json"
    short.write_text(json.dumps(doc, separators=(",", ":")))
    proc = run("oracle", str(short), "--unique", expect=1)
    check(proc.stdout.strip() == "false,,,", proc.stdout)

    # bench: cycles against the oracle, deterministic modulo timing
    out1, out2 = work / "bench1.csv", work / "bench2.csv"
    for out in (out1, out2):
        run("bench", "--family", "random-cycle", "--n-list", "4..10",
            "--trials", "20", "--algos", "cycle", "--with-oracle",
            "--out", str(out))
    rows = list(csv.DictReader(out1.open()))
    check(len(rows) == 140, f"{len(rows)} rows")
    for row in rows:
        check(row["error"] == "", row)
        n = int(row["n"])
        check(int(row["edges"]) <= 3 * (n - 1) // 2, row)
        check(int(row["edges"]) >= int(row["oracle_edges"]), row)

    def strip_ms(path):
        return [
            {k: v for k, v in row.items() if k != "wall_time_ms"}
            for row in csv.DictReader(path.open())
        ]

    check(strip_ms(out1) == strip_ms(out2), "bench not deterministic")

    # bench usage error and per-row failures
    run("bench", "--family", "random-cycle", "--n-list", "", "--trials", "2",
        "--algos", "cycle", "--out", str(work / "x.csv"), expect=2)
    proc = run("bench", "--family", "random-cycle", "--n-list", "4",
               "--trials", "2", "--algos", "cycle", "--L", "3",
               "--out", "-", expect=1)
    check("error" in proc.stdout.splitlines()[0], "missing error column")
    failed_rows = [r for r in csv.DictReader(proc.stdout.splitlines())]
    check(all(r["error"] != "" for r in failed_rows), "rows should carry errors")

    # parallel bench matches the sequential run
    par = work / "bench_par.csv"
    run("bench", "--family", "random-cycle", "--n-list", "4..10", "--trials",
        "20", "--algos", "cycle", "--with-oracle", "--jobs", "4",
        "--out", str(par))
    check(strip_ms(out1) == strip_ms(par), "parallel bench differs")

    print(f"cli driver: {CHECKS} checks passed")


if __name__ == "__main__":
    main()
