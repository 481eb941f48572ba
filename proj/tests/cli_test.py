"""End-to-end checks of the perazzo command line: pipes, golden text,
JSON schemas and exit codes."""

import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema

CLI, SCHEMAS, GOLDEN = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
failures = []


def run(args, stdin=None, env=None, expect=0):
    proc = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, env=env)
    if proc.returncode != expect:
        failures.append(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc.stdout


def check(cond, what):
    if not cond:
        failures.append(what)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def valid(doc, name, what):
    try:
        jsonschema.validate(doc, schema(name))
    except jsonschema.ValidationError as e:
        failures.append(f"{what}: {e.message}")


# gen | betti reproduces the golden tables for every canonical case
for d in range(5, 9):
    golden = (GOLDEN / f"betti_min_p4_d{d}.txt").read_text()
    for case in ("i", "ii", "iii"):
        doc = run(["gen", "--canonical", case, "--d", str(d)])
        valid(json.loads(doc), "form_document", f"gen --canonical {case} --d {d}")
        check(run(["betti"], stdin=doc) == golden, f"betti of canonical {case} d={d} differs from golden")

table = json.loads(run(["betti", "--format", "json"], stdin=run(["gen", "--canonical", "ii", "--d", "6"])))
valid(table, "betti_table", "betti --format json")
check(any(e == {"i": 1, "j": 2, "beta": 9} for e in table["entries"]), "beta_{1,2} = 9 missing")

# extremes
r = json.loads(run(["extremes", "--n", "7", "--m", "4", "--d", "6", "--format", "json"]))
valid(r, "extremes_report", "extremes 7 4 6")
check(r["hmax"] == [1, 12, 42, 40, 42, 12, 1] and not r["hmax_unimodal"], "extremes 7 4 6")
r = json.loads(run(["extremes", "--n", "9", "--m", "3", "--d", "4", "--format", "json"]))
check(r["coincide"] and r["hmax"] == r["hmin"] == [1, 13, 12, 13, 1], "extremes 9 3 4")
r = json.loads(run(["extremes", "--n", "2", "--m", "2", "--d", "7", "--format", "json"]))
check(r["hmin"] == [1, 5, 6, 6, 6, 6, 5, 1] and r["hmax"] == [1, 5, 9, 9, 9, 9, 5, 1], "extremes 2 2 7")
run(["extremes", "--n", "1", "--m", "2", "--d", "5"], expect=3)

# Lefschetz verdicts through pipes
v = json.loads(run(["wlp", "--format", "json"], stdin=run(["gen", "--min", "--n", "3", "--m", "3", "--d", "8", "--seed", "1"])))
valid(v, "lefschetz_verdict", "wlp min")
check(v["verdict"] == "holds" and len(v["witness"]) == 7, "gen --min 3 3 8 | wlp should hold")
v = json.loads(run(["wlp", "--format", "json"], stdin=run(["gen", "--general", "--n", "2", "--m", "2", "--d", "7", "--seed", "1"])))
valid(v, "lefschetz_verdict", "wlp general")
check(v["verdict"] == "fails_generic", "gen --general 2 2 7 | wlp should fail")
v = json.loads(run(["slp", "--format", "json"], stdin=run(["gen", "--canonical", "i", "--d", "6"])))
check(v["verdict"] == "fails_generic", "slp of a Perazzo form should fail")

# hilbert positions and Hessian
check(run(["hilbert"], stdin=run(["gen", "--min", "--n", "4", "--m", "3", "--d", "6"])).split()[-1] == "min", "hilbert min")
check(run(["hilbert", "--full-check"], stdin=run(["gen", "--general", "--with-g", "--n", "4", "--m", "3", "--d", "6"])).split()[-1] == "max",
      "hilbert max")
check(run(["hessian"], stdin=run(["gen", "--mixed", "--n", "3", "--m", "2", "--d", "5"])).startswith("hessian: vanishes"), "hessian")
check(run(["hessian", "--symbolic"], stdin=run(["gen", "--canonical", "iii", "--d", "5", "--lambda", "2"])).startswith("hessian: vanishes"),
      "symbolic hessian")
run(["hessian", "--symbolic"], stdin=run(["gen", "--general", "--n", "5", "--m", "4", "--d", "5"]), expect=3)

# rational documents, --input files and round trips through the parser
doc = run(["gen", "--power-sum", "2", "--with-g", "--n", "3", "--m", "3", "--d", "5", "--field", "rational", "--seed", "9"])
parsed = json.loads(doc)
valid(parsed, "form_document", "rational gen")
check(parsed["field"] == {"kind": "rational"}, "rational field descriptor")
tmp = Path(os.environ.get("TMPDIR", "/tmp")) / f"perazzo_cli_{os.getpid()}.json"
tmp.write_text(doc)
check(run(["hilbert", "--input", str(tmp)]) == run(["hilbert"], stdin=doc), "--input file vs stdin")
tmp.unlink()

# seeds: flag, environment default, determinism
env = dict(os.environ, PERAZZO_SEED="17")
a = run(["gen", "--general", "--n", "2", "--m", "2", "--d", "5"], env=env)
b = run(["gen", "--general", "--n", "2", "--m", "2", "--d", "5", "--seed", "17"])
c = run(["gen", "--general", "--n", "2", "--m", "2", "--d", "5", "--seed", "18"])
check(a == b and a != c, "PERAZZO_SEED default")
run(["gen", "--general", "--n", "2", "--m", "2", "--d", "5"], env=dict(os.environ, PERAZZO_SEED="x"), expect=2)

# parse and precondition errors
run(["betti"], stdin="{not json", expect=2)
run(["betti"], stdin='{"n":2,"m":2,"d":5,"field":{"kind":"rational"},"p":[[{"exp":[1],"coeff":"1"}]]}', expect=2)
bad = json.loads(run(["gen", "--min", "--n", "2", "--m", "2", "--d", "5"]))
bad["p"][1] = bad["p"][0]
run(["betti"], stdin=json.dumps(bad), expect=3)
run(["gen", "--canonical", "i", "--d", "4"], expect=3)
run(["gen", "--canonical", "iii", "--d", "5", "--lambda", "0"], expect=3)
run(["gen", "--min", "--general"], expect=2)
run(["nonsense"], expect=2)

# verify: a golden-only run, a Stanley-only run and a bad check name
rep = json.loads(run(["verify", "--checks", "betti-main", "--d-range", "5..8", "--golden-dir", str(GOLDEN),
                      "--rational-fraction", "0", "--format", "json"]))
valid(rep, "verify_report", "verify betti-main")
check(rep["summary"]["fail"] == 0 and rep["summary"]["pass"] == 12, "verify betti-main")
check(all("golden text identical" in r["details"] for r in rep["results"]), "verify golden comparison")
rep = json.loads(run(["verify", "--pairs", "9,3", "--d-range", "4..4", "--formula-d-max", "4",
                      "--checks", "unimodality,minimal-wlp,extremes-coincide", "--format", "json"]))
check(rep["summary"]["fail"] == 0 and rep["summary"]["pass"] >= 3, "verify Stanley grid")
check([r["check"] for r in rep["results"]] == sorted(r["check"] for r in rep["results"]), "report ordered by check")
run(["verify", "--checks", "no-such-check"], expect=2)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli checks passed")
