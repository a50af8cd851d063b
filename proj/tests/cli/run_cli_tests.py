#!/usr/bin/env python3
"""Exit-code and output-shape checks for the goa2 command line."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
SCHEMA = Path(sys.argv[2]) if len(sys.argv) > 2 else None
failures = []


def validate_schema(payload, name):
    if SCHEMA is None:
        return
    try:
        import jsonschema
    except ImportError:
        return
    try:
        jsonschema.validate(payload, json.loads(SCHEMA.read_text()))
        check(f"{name} matches the report schema", True)
    except jsonschema.ValidationError as err:
        check(f"{name} matches the report schema", False, err.message)


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def check(name, condition, detail=""):
    status = "ok" if condition else "FAIL"
    print(f"[{status}] {name} {detail}")
    if not condition:
        failures.append(name)


def main():
    out = run("list")
    rows = [line for line in out.stdout.splitlines()[1:] if line.strip()]
    check("list exit 0", out.returncode == 0)
    check("list has 19 rows", len(rows) == 19, f"got {len(rows)}")
    check("T2.3 not constructed", any("T2.3" in r and "not-constructed" in r for r in rows))
    check("W24 not constructed", any("W24" in r and "not-constructed" in r for r in rows))

    with tempfile.TemporaryDirectory() as tmp:
        report = Path(tmp) / "r.json"

        out = run("certify", "T1.3", "--out", str(report))
        check("certify T1.3 exit 0", out.returncode == 0, out.stderr.strip())
        payload = json.loads(report.read_text())
        check("certify schema version", payload["schema_version"] == "1")
        check("certify g2 dim 14", payload["certification"]["dims"]["h"] == 14)

        check("certify T2.3 exit 2", run("certify", "T2.3").returncode == 2)
        check("certify unknown exit 2", run("certify", "Zz").returncode == 2)

        out = run("certify", "W6", "--out", str(report))
        check("certify W6 exit 0", out.returncode == 0)
        payload = json.loads(report.read_text())
        validate_schema(payload, "certification report")
        relations = payload["certification"]["bracket_relations"]
        check("W6 nine relations", len(relations) == 9)
        check("W6 residuals small", all(r["residual"] < 1e-10 for r in relations))

        out = run("verify", "T1.9", "--mode", "condition-i", "--samples", "60",
                  "--seed", "42", "--out", str(report))
        check("verify T1.9 exit 0", out.returncode == 0, out.stderr.strip())
        payload = json.loads(report.read_text())
        check("verify verdict", payload["campaign"]["verdict"] == "go-verified")
        check("verify counts sum", sum(payload["campaign"]["counts"].values()) == 60)
        validate_schema(payload, "campaign report")

        check("verify W6 geodesic deformed exit 1",
              run("verify", "W6", "--mode", "geodesic", "--phi", "1+s^2/4",
                  "--samples", "60", "--seed", "42", "--out", str(report)).returncode == 1)
        check("verify W6 geodesic constant exit 0",
              run("verify", "W6", "--mode", "geodesic", "--phi", "1",
                  "--samples", "60", "--seed", "42", "--out", str(report)).returncode == 0)
        check("verify rejects bad profile",
              run("verify", "W6", "--mode", "geodesic", "--phi", "exp(2*s)",
                  "--samples", "10", "--out", str(report)).returncode == 2)
        check("verify geodesic needs phi",
              run("verify", "W6", "--mode", "geodesic", "--samples", "10",
                  "--out", str(report)).returncode == 2)
        check("verify unknown key exit 2",
              run("verify", "Zz", "--mode", "theta", "--out", str(report)).returncode == 2)
        check("verify bad flag exit 2", run("verify", "W6", "--junk").returncode == 2)
        check("verify bad mode exit 2",
              run("verify", "W6", "--mode", "banana").returncode == 2)
        check("verify bad theta exit 2",
              run("verify", "T1.5", "--mode", "theta", "--theta", "0.5",
                  "--out", str(report)).returncode == 2)
        check("verify param below range exit 2",
              run("verify", "T1.1", "--mode", "condition-i", "--n", "1",
                  "--samples", "5", "--out", str(report)).returncode == 2)

        out_dir = Path(tmp) / "t1"
        out_a = run("table1", "--samples", "25", "--seed", "42", "--out", str(out_dir))
        check("table1 exit 0", out_a.returncode == 0, out_a.stderr.strip())
        out_b = run("table1", "--samples", "25", "--seed", "42", "--jobs", "4")
        check("table1 byte-identical", out_a.stdout == out_b.stdout)
        check("table1 skip row", "skipped (not constructed)" in out_a.stdout)
        check("table1 markdown written", (out_dir / "table1.md").exists())
        check("table1 row report written", (out_dir / "T1.3.json").exists())
        row_report = json.loads((out_dir / "T1.3.json").read_text())
        check("table1 row verdict", row_report["campaign"]["verdict"] == "go-verified")

    # Seed from the environment is honored.
    with tempfile.TemporaryDirectory() as tmp:
        report = Path(tmp) / "seeded.json"
        env_out = run("verify", "T1.5", "--mode", "condition-i", "--samples", "5",
                      "--out", str(report), env={"GOA2_SEED": "7"})
        check("env seed accepted", env_out.returncode == 0, env_out.stderr.strip())
        payload = json.loads(report.read_text())
        check("env seed echoed", payload["campaign"]["config"]["seed"] == 7)

    if failures:
        print(f"{len(failures)} CLI checks failed: {failures}")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
