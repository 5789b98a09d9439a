"""Summarise a finished run: errors by method, speed versus the solver, producers.

    python demos/inspect_run.py runs/fhn_desk
"""

import json
import statistics
import sys
from collections import defaultdict
from pathlib import Path

run = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/fhn_desk")
ev = json.loads((run / "evaluation.json").read_text())

mse = defaultdict(list)
for r in ev["results"]:
    mse[r["method"]].append(r["mse"])
pct = defaultdict(list)
for r in ev["timings"]:
    pct[r["method"]].append(r["solver_relative_pct"])

print(f"{'method':<22} {'median MSE':>12} {'seeds':>6} {'% of solver':>12}")
for name, vals in mse.items():
    print(f"{name:<22} {statistics.median(vals):12.4g} {len(vals):6d} {statistics.median(pct[name]):11.2f}%")

print("\nproducers of the first test forecast (first seed):")
first = ev["tag_histograms"][0]["seed"]
for h in ev["tag_histograms"]:
    if h["seed"] == first:
        print(f"  {h['method']:<22} {h['tags']}")
