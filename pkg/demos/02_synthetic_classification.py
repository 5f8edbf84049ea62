"""
Ramps against sinusoids
=======================

Two classes with different exact recurrences.  Each test instance is pushed
through every training law, one column is kept per class, and the class
whose column sits closest to zero wins.
"""

import tempfile
from pathlib import Path

import numpy as np

from llt import (EmbeddingConfig, abs_mean_classify, accuracy, scan_dataset, split, train_laws,
                 transform_test)

rng = np.random.default_rng(1)
root = Path(tempfile.mkdtemp()) / "data"
t = np.arange(80)
for cls, make in {
    "ramp": lambda: rng.uniform(-2, 2) + rng.uniform(0.1, 1) * t,
    "wave": lambda: rng.uniform(1, 3) * np.sin(rng.uniform(0.2, 0.5) * t + rng.uniform(0, 6)),
}.items():
    (root / cls).mkdir(parents=True)
    for i in range(12):
        # small noise keeps the problem honest
        z = make() + rng.normal(0, 0.01, t.size)
        (root / cls / f"{cls}{i:02d}.csv").write_text(
            "x\n" + "\n".join(repr(v) for v in z.tolist()) + "\n")

index = scan_dataset(root)
plan = split(index, test_ratio=0.25, seed=3)
print(plan.tau, "training and", plan.n_test, "test instances")

# laws are trained once and reused for every selection rule
bank = train_laws(index, plan, EmbeddingConfig(dim=4))
for criterion in ("rank", "var", "mean"):
    table = transform_test(index, plan, bank, criterion)
    preds = abs_mean_classify(table)
    acc = accuracy([p.predicted for p in preds], [p.label for p in preds])
    print(f"{criterion:>4}: table {table.numeric_shape}, accuracy {acc:.3f}")

print(table.columns)
print(table.values[:4])
