"""Drives the qsheaf executable: examples, exit codes, determinism, config files."""
import json
import os
import subprocess
import sys
import tempfile

EXE = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([EXE, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def result(*args):
    rc, out, err = run(*args)
    if rc != 0:
        raise SystemExit(f"{args}: exit {rc}: {err}")
    return json.loads(out)


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


d = result("dims", "--cartan", "A1", "--l", "5", "--max-depth", "6")
check(d["result"]["f_dims_by_depth"] == [1, 1, 1, 1, 1, 0, 0], "dims A1 l=5")
check(d["field"]["phi_N"] == [1, 0, -1, 0, 1, 0, -1, 0, 1] and d["field"]["N"] == 20, "Phi_20 header")
check(all("gram_det" in e for e in d["result"]["f"]), "Gram determinants present")
d = result("dims", "--cartan", "A1", "--l", "5", "--max-depth", "5", "--weight", "4")
check(d["result"]["L_dims_by_depth"] == [1, 1, 1, 1, 1, 0], "Steinberg L dims")

for ws, want in [("1,1", 1), ("3,3,3", 0), ("0", 1), ("2,2,3,3", 1)]:
    b = result("blocks", "--cartan", "A1", "--l", "10", "--weights", ws)
    check(b["result"]["dim"] == want and b["result"]["alcove_ok"], f"blocks {ws}")
rc, out, _ = run("blocks", "--cartan", "A1", "--l", "10", "--weights", "4")
check(rc == 2 and json.loads(out)["result"]["alcove_ok"] is False, "blocks outside the alcove")

t = result("tor", "--cartan", "A1", "--l", "5", "--weights", "2", "--nu", "3")
check(t["result"]["tor"] == [0, 0, 0, 0] and t["result"]["degrees"] == [-3, -2, -1, 0], "tor A1")

for ext, want in [("shriek", [0, 0, 0, 0]), ("star", [0, 0, 1, 1]), ("ic", [0, 0, 1, 0])]:
    a = result("arrcoh", "--cartan", "A1", "--l", "5", "--nu", "3", "--weight", "2", "--ext", ext, "--skew")
    check(a["result"]["cohomology"] == want, f"arrcoh {ext}")
a = result("arrcoh", "--cartan", "A1", "--l", "5", "--nu", "1", "--weight", "2", "--ext", "star", "--with-m")
check(len(a["result"]["m"]) == 2, "arrcoh m matrices")

g = result("gram", "--cartan", "A2", "--l", "5", "--nu", "1,1")
check(g["result"]["basis"] == [[0, 1], [1, 0]] and len(g["result"]["matrix"][0][0]) == 8, "gram A2")
v = result("verma", "--cartan", "A2", "--l", "5", "--weight", "1,2", "--max-depth", "4")
check(v["result"]["graded"][0]["dim_L"] == 1, "verma A2")

rc, out, _ = run("verify", "--cartan", "A1", "--l", "5", "--suite", "forms")
rep = json.loads(out)
check(rc == 0 and rep["result"]["pass"] and all(r["pass"] for r in rep["result"]["results"]), "verify forms")
rc2, out2, _ = run("verify", "--cartan", "A1", "--l", "5", "--suite", "forms")
check(out == out2, "byte-stable output")
check(run("verify", "--cartan", "A1", "--l", "5", "--suite", "bogus")[0] == 2, "unknown suite is a usage error")
check(run("dims", "--cartan", "A1")[0] == 2, "missing --l")
check(run("dims", "--cartan", "A1", "--l", "6", "--k", "3")[0] == 2, "k not coprime")
check(run("frobnicate")[0] == 2, "unknown subcommand")
check(run("gram", "--cartan", "A2", "--l", "5", "--nu", "1")[0] == 2, "nu of wrong rank")

with tempfile.TemporaryDirectory() as tmp:
    toml = os.path.join(tmp, "c.toml")
    with open(toml, "w") as f:
        f.write('cartan = "A1"\nl = 5\nmax_depth = 6\n')
    d = result("dims", "--config", toml)
    check(d["result"]["f_dims_by_depth"] == [1, 1, 1, 1, 1, 0, 0], "TOML config")
    d = result("dims", "--config", toml, "--max-depth", "2")
    check(d["config"]["max_depth"] == 2, "flags win over the file")
    js = os.path.join(tmp, "c.json")
    with open(js, "w") as f:
        json.dump({"cartan": "A1", "l": 10, "weights": "2,2,3,3"}, f)
    b = result("blocks", "--config", js)
    check(b["result"]["dim"] == 1 and b["config"]["l"] == 10, "JSON config")
    outp = os.path.join(tmp, "o.json")
    rc, out, _ = run("dims", "--config", toml, "--out", outp)
    with open(outp) as f:
        check(rc == 0 and out == "" and json.load(f)["config"]["command"] == "dims", "--out")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
