#!/usr/bin/env python3
"""End-to-end checks of the cstar command line: outputs, exit codes, determinism."""

import json
import os
import shutil
import subprocess
import sys

CLI, SAMPLES, SCRATCH = sys.argv[1], sys.argv[2], sys.argv[3]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("CSTAR_LOG", None)
    if env:
        full_env.update(env)
    p = subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def expect(args, code, stdout=None, contains=None, env=None):
    rc, out, err = run(*args, env=env)
    label = "cstar " + " ".join(args)
    check(rc == code, f"{label} -> exit {code} (got {rc}; stderr: {' '.join(err.split())[:200]})")
    if stdout is not None:
        check(out.strip() == stdout, f"{label} prints {stdout!r} (got {out.strip()!r})")
    if contains is not None:
        check(contains in out, f"{label} output contains {contains!r}")
    return out, err


def sample(name):
    return os.path.join(SAMPLES, name)


shutil.rmtree(SCRATCH, ignore_errors=True)
os.makedirs(SCRATCH)

# classify
out, _ = expect(["classify", sample("p1xp1_minus_diagonal.json")], 0)
report = json.loads(out)
check(report["verdict"] == "P1xP1MinusDiagonal", "P1xP1 verdict")
check(report["class_group"]["description"] == "Z", "P1xP1 class group")
check(report["canonical_class"]["trivial"] is True, "P1xP1 canonical class")

out, _ = expect(["classify", sample("p2_minus_conic.json")], 0)
report = json.loads(out)
check(report["verdict"] == "P2MinusQuadric", "P2 verdict")
check(report["multiple_fibers"] == [{"point": "0", "multiplicity": "2"}], "P2 multiple fiber")

out, _ = expect(["classify", sample("veronese_cone.json"), "--pieces", "--degree-cap", "2"], 0)
report = json.loads(out)
check(report["toric"] == "V2,1", "Veronese cone recognized")
check([p["degree"] for p in report["graded_pieces"]] == [-2, -1, 0, 1, 2], "graded pieces listed")

out, _ = expect(["classify", sample("elliptic.json"), "--pieces", "--degree-cap", "3"], 0)
check(json.loads(out)["graded_pieces"][3]["over_base"] is False, "elliptic pieces are bases")

out, err = expect(["classify", sample("bad/not_negative.json")], 2)
check("D_++D_-≤ 0" in json.loads(out)["violations"][0], "violation names the constraint")
expect(["classify", sample("bad/malformed.json")], 1)
expect(["classify", sample("does_not_exist.json")], 1)

out, _ = expect(["classify", SAMPLES], 0)
batch = json.loads(out)["results"]
check([r["file"] for r in batch] == sorted(r["file"] for r in batch), "batch results sorted")
check(all(r["status"] == "ok" for r in batch), "batch of good samples")
out, _ = expect(["classify", sample("bad")], 2)
statuses = {r["file"]: r["status"] for r in json.loads(out)["results"]}
check(statuses == {"malformed.json": "parse_error", "not_negative.json": "invalid"}, "failures isolated per file")

target = os.path.join(SCRATCH, "report.json")
expect(["classify", sample("p2_minus_conic.json"), "--out", target], 0, stdout="")
with open(target) as f:
    check(json.load(f)["verdict"] == "P2MinusQuadric", "--out writes the report")

# toric
expect(["toric", "isom", "V5,2", "V5,3"], 0, stdout="true")
expect(["toric", "isom", "V8,3", "V8,5"], 0, stdout="false")
expect(["toric", "basis", "V2,1"], 0, stdout="x^2, xy, y^2")
out, _ = expect(["toric", "extract", "V1,0", "--weights", "1,-1"], 0)
ex = json.loads(out)
check(ex["dplus"] == [] and ex["dminus"] == [{"point": "0", "coeff": "-1"}], "extract V1,0 gives (0, -[0])")
out, _ = expect(["toric", "recognize", sample("veronese_cone.json")], 0)
check(json.loads(out)["toric"] == "V2,1", "toric recognize")
out, _ = expect(["toric", "recognize", sample("p1xp1_minus_diagonal.json")], 0)
check(json.loads(out)["toric"] is None, "non-toric gives null")
expect(["toric", "isom", "V4,2", "V4,1"], 2)
expect(["toric", "basis", "V3,5"], 2)
expect(["toric", "basis", "V3-1"], 1)
expect(["toric", "extract", "V3,1", "--weights", "1,1"], 2)
expect(["toric", "extract", "V3,1", "--weights", "1;1"], 1)

# deriv
expect(["deriv", "conj", "x dx - y dy", "x^2 dy"], 0, stdout="x dx + (-y + 3x^2) dy")
expect(["deriv", "bracket", "x dx - y dy", "x^2 dy"], 0, stdout="3x^2 dy")
expect(["deriv", "lnd", "x^2 dy"], 0, stdout="Nilpotent(2)")
expect(["deriv", "lnd", "x dx", "--lnd-bound", "5"], 0, stdout="NotNilpotentWithinBound(5)")
expect(["deriv", "exp", "x^2 dy"], 0, stdout="x -> x\ny -> y + x^2")
expect(["deriv", "jordan", "x dx + (x + y) dy"], 0, stdout="semisimple: x dx + y dy\nnilpotent: x dy")
expect(["deriv", "normalize", "x dx + (-y + 3x^2) dy", "--weights", "1,-1"], 0,
       stdout="c = 1\nchain: -x^2 dy\nresidual: x dx - y dy\niterations: 1")
expect(["deriv", "normalize", "x dx - y dy + y dx"], 3)
expect(["deriv", "normalize", "x dx - y dy + x^2 dx"], 3)
expect(["deriv", "exp", "x dx"], 2)
expect(["deriv", "jordan", "y dx + x dy + x dx"], 2)
expect(["deriv", "lnd", "x dx +"], 1)
expect(["deriv", "bracket", "x dx"], 1)

# equiv
out, _ = expect(["equiv", sample("full_ml.json"), sample("full_ml_moved.json")], 0)
eq = json.loads(out)
check(eq["equivalent"] is True and eq["guarantee_applies"] is True, "equivalent presentations")
out, _ = expect(["equiv", sample("veronese_cone.json"), sample("affine_plane.json")], 0)
check(json.loads(out)["mode"] == "toric" and json.loads(out)["equivalent"] is False, "toric comparison")
expect(["equiv", sample("elliptic.json"), sample("full_ml.json")], 2)

# usage
expect([], 1)
expect(["frobnicate"], 1)
expect(["classify", sample("p2_minus_conic.json"), "--degree-cap", "0"], 1)
expect(["--help"], 0)

# logging goes to stderr only
_, out_plain, _ = run("classify", sample("p2_minus_conic.json"))
rc, out_logged, err_logged = run("classify", sample("p2_minus_conic.json"), env={"CSTAR_LOG": "info"})
check(out_plain == out_logged and "[cstar]" in err_logged, "CSTAR_LOG writes to stderr only")

# determinism
for args in (["classify", SAMPLES], ["deriv", "normalize", "x dx + (-y + 3x^2 + 4x^3) dy"],
             ["toric", "extract", "V7,3", "--weights", "2,-3"]):
    outputs = {run(*args)[1] for _ in range(3)}
    check(len(outputs) == 1, "byte-identical output for " + " ".join(args[:2]))

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
