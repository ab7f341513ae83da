"""The ``wha`` command line, driven from Python so the demo runs anywhere."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path


def wha(*args, stdin=b""):
    p = subprocess.run([sys.executable, "-m", "weakhopf.cli", *args], input=stdin, capture_output=True, check=False)
    return p.returncode, p.stdout, p.stderr


# generate op-tensor --blocks 2 | deform --sample --seed 7 | analyze
_, doc, _ = wha("generate", "op-tensor", "--blocks", "2")
code, deformed, report = wha("deform", "--sample", "--seed", "7", stdin=doc)
print("deform exit", code, "passed:", json.loads(report)["passed"])
code, out, _ = wha("analyze", stdin=deformed)
info = json.loads(out)
print("spectrum invariant", info["spectrum_invariant"])
print("weak Kac flags", info["weak_kac"])

# validate exits 0 on a good document
print("validate exit", wha("validate", stdin=doc)[0])

# two different seeds give provably different structures: exit code 3
with tempfile.TemporaryDirectory() as tmp:
    a, b = Path(tmp, "a.json"), Path(tmp, "b.json")
    a.write_bytes(deformed)
    b.write_bytes(wha("deform", "--sample", "--seed", "8", stdin=doc)[1])
    code, out, _ = wha("invariant", str(a), str(b))
print("invariant exit", code, json.loads(out)["non_isomorphic"])
