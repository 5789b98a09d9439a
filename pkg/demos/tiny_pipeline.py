"""The whole pipeline on a toy Kuramoto-Sivashinsky problem in about a minute.

Every stage runs through the same code as the command line tool:
generate, train-ae, encode, train-blocks, forecast, evaluate, report.
Budgets are tiny, so the numbers only show the plumbing. A second run
of the script is all cache hits.

    python demos/tiny_pipeline.py [output-dir]
"""

import csv
import sys

from refreshnet.experiment import ExperimentConfig, run_pipeline

out = sys.argv[1] if len(sys.argv) > 1 else "runs/demo_tiny"
cfg = ExperimentConfig.from_dict({
    "experiment": {"benchmark": "ks", "k": 5, "blocks": 2, "seeds": [0], "out": out},
    "solver": {"transient": 20, "splits": {"train": [1, 600], "validation": [1, 200], "test": [1, 200]}},
    "autoencoder": {"epochs": 20, "max_train_samples": 300},
    "propagator": {"hidden": 16, "epochs": 20},
    "baselines": {"led": [1]},
})

def _cell(text):
    try:
        return text if text.isdigit() else f"{float(text):.4g}"
    except ValueError:
        return text


pipe = run_pipeline(cfg, log=print)
print("\ncache hits:", pipe.hits or "none")
for name in ("results.csv", "timings.csv"):
    print(f"\n{name}")
    with open(f"{out}/report/{name}", newline="") as fh:
        rows = [[_cell(c) for c in row] for row in csv.reader(fh)]
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  " + "  ".join(c.rjust(w) for c, w in zip(row, widths)))
print(f"\nfigures: {out}/report/*.svg")
