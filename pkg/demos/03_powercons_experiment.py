"""
Repeated experiment on PowerCons
================================

Requires the UCR files PowerCons_TRAIN.tsv and PowerCons_TEST.tsv in the
directory named by LLT_POWERCONS_DIR.  Repeats default to 100; set
LLT_REPEATS to change that.
"""

import os
import sys
import tempfile
from pathlib import Path

from llt import ExperimentConfig, convert_ucr, run_experiment

src = Path(os.environ.get("LLT_POWERCONS_DIR", "data/PowerCons"))
train, test = src / "PowerCons_TRAIN.tsv", src / "PowerCons_TEST.tsv"
if not (train.is_file() and test.is_file()):
    sys.exit(f"PowerCons files not found in {src}")

work = Path(tempfile.mkdtemp())
index = convert_ucr(train, test, work / "data")
print(index.n_instances, "instances,", len(index.classes), "classes")

repeats = int(os.environ.get("LLT_REPEATS", "100"))
for select in ("rank", "var", "mean"):
    cfg = ExperimentConfig(work / "data", dim=5, lag=1, test_ratio=0.1, select=select,
                           repeats=repeats, base_seed=0)
    summary = run_experiment(cfg, out_dir=work / select, workers=os.cpu_count() or 1)
    print(f"{select:>4}: mean {summary.mean:.4f}  std {summary.std:.4f}")
    for low, high, count in summary.bins:
        if count:
            print(f"      [{low:.2f}, {high:.2f}) {'#' * count}")

print("outputs in", work)
