#!/usr/bin/env python3
"""End-to-end checks of the linrel CLI: exit codes, report content, and
byte-identical reruns for equal seeds."""

import json
import subprocess
import sys
import tempfile
import os


def run(cli, *args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    cli, data_dir = sys.argv[1], sys.argv[2]
    gf2 = os.path.join(data_dir, "gf2_basics.json")
    symp = os.path.join(data_dir, "rational_symplectic.json")
    failures = []

    def check(name, cond):
        if not cond:
            failures.append(name)
            print(f"FAIL {name}")
        else:
            print(f"ok   {name}")

    code, out, _ = run(cli, "compose", "--input", gf2, "--chain", "overlap")
    report = json.loads(out)
    check("compose exit", code == 0)
    check("compose excess", report["excess"] == 1)
    check("compose defect", report["defect"] == 0)
    check("compose echo", report["command"] == "compose" and report["seed"] == 0)

    code, out, _ = run(cli, "compose", "--input", gf2, "--chain", "gap")
    report = json.loads(out)
    check("gap defect", code == 0 and report["defect"] == 1 and report["excess"] == 0)

    code, out, _ = run(cli, "ww", "--input", gf2, "--chain", "gap", "--tag", "lrel")
    report = json.loads(out)
    check("ww indices", code == 0 and report["defect"] == 1 and report["excess"] == 0)

    code, out, _ = run(cli, "ww-two-term", "--input", gf2, "--ww", "m_full")
    report = json.loads(out)
    check("two-term exit", code == 0)
    check("two-term checks", all(report["checks"].values()))

    # Two-term from a chain: the unit chain [zero, zero] carries (D, E) = (1, 0).
    code, out, _ = run(cli, "ww-two-term", "--input", gf2, "--chain", "gap", "--tag", "lrel")
    report = json.loads(out)
    check("two-term from chain", code == 0 and all(report["checks"].values()))

    code, out, _ = run(cli, "decompose", "--input", gf2, "--item", "gap_triple")
    report = json.loads(out)
    check("decompose", code == 0 and report["predicted"] == {"defect": 1, "excess": 0, "shadow_dim": 0})

    code, out, _ = run(cli, "decompose", "--input", symp, "--item", "crossing")
    report = json.loads(out)
    check("decompose iso pair", code == 0 and report["multiplicities"]["n4"] == 1)

    code, out, _ = run(cli, "cotangent", "--input", symp, "--relation", "rank1", "--second", "proj")
    report = json.loads(out)
    check("cotangent", code == 0 and report["lagrangian"] and report["pair"]["index_law"])

    code, out, _ = run(cli, "invariants", "--input", symp, "--relation", "rank1")
    report = json.loads(out)
    check("invariants", code == 0 and report["dims"]["dom"] == 2)

    code, out, _ = run(cli, "ww", "--input", symp, "--chain", "loop", "--tag", "slrel")
    report = json.loads(out)
    check("slrel loop", code == 0 and report["defect"] == 0 and report["excess"] == 0)

    # Two fully overlapping lagrangians: defect and excess coincide at 1.
    code, out, _ = run(cli, "ww", "--input", symp, "--chain", "overlap_lagrangians",
                       "--tag", "slrel")
    report = json.loads(out)
    check("slrel overlap", code == 0 and report["defect"] == 1 and report["excess"] == 1)

    code, out, _ = run(cli, "ww-two-term", "--input", symp, "--ww", "indexed_diag")
    report = json.loads(out)
    check("symplectic two-term", code == 0 and all(report["checks"].values())
          and "form" in report["Q"])

    code, out, _ = run(cli, "ww-two-term", "--input", symp, "--ww", "iso_point")
    report = json.loads(out)
    check("isotropic two-term", code == 0 and all(report["checks"].values()))

    # Determinism: identical seeds must give byte-identical reports.
    args = ("check", "--suite", "duality", "--seed", "42", "--cases", "25",
            "--field", "gf:7", "--max-dim", "4")
    code1, out1, _ = run(cli, *args)
    code2, out2, _ = run(cli, *args)
    check("check passes", code1 == 0)
    check("check deterministic", out1 == out2)

    code, out, _ = run(cli, "check", "--suite", "oracle-gf2", "--seed", "9", "--cases", "40",
                       "--field", "gf:2", "--max-dim", "3")
    check("oracle suite", code == 0)

    # --output writes the same bytes the stdout path produces.
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "report.json")
        code, out, _ = run(cli, "compose", "--input", gf2, "--chain", "overlap",
                           "--output", path)
        with open(path) as fh:
            file_text = fh.read()
        code2, stdout_text, _ = run(cli, "compose", "--input", gf2, "--chain", "overlap")
        check("output file", code == 0 and file_text == stdout_text)

    # Exit codes: 1 validation, 2 parse, 3 failing suite is exercised via a
    # missing name, bad JSON, and a bad field spec.
    code, _, err = run(cli, "compose", "--input", gf2, "--chain", "missing")
    check("validation exit", code == 1 and "missing" in err)

    with tempfile.TemporaryDirectory() as tmp:
        bad = os.path.join(tmp, "bad.json")
        with open(bad, "w") as fh:
            fh.write("{this is not json")
        code, _, err = run(cli, "compose", "--input", bad, "--chain", "x")
        check("parse exit", code == 2)

    code, _, _ = run(cli, "check", "--suite", "no-such-suite", "--cases", "1")
    check("unknown suite exit", code == 1)

    if failures:
        print(f"{len(failures)} CLI integration check(s) failed")
        return 1
    print("all CLI integration checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
