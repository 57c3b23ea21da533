"""
Reports, tables and the class-wise IoU chart
============================================

Evaluation reports are plain CSV files; charts and tables are built from them.
"""

import os
import tempfile

import torch

from segcycle.data import DatasetSpec, SyntheticDataset
from segcycle.experiment import cmd_plot_iou, evaluate_networks
from segcycle.metrics import ConfusionAccumulator, read_report

spec = DatasetSpec(resolution=(32, 32), size=6, split="val")
val = SyntheticDataset(spec)

# two stand-in segmenters: the ground truth, and the ground truth with
# every disc pixel relabelled as background
truth = {val[i][0].numpy().tobytes(): val[i][1] for i in range(len(val))}


def perfect(x):
    return torch.stack([truth[img.numpy().tobytes()] for img in x])


def misses_discs(x):
    y = perfect(x).clone()
    y[:, 0] += y[:, 2]
    y[:, 2] = 0
    return y


out = tempfile.mkdtemp(prefix="segcycle_reports_")
paths = []
for name, G in (("perfect", perfect), ("misses_discs", misses_discs)):
    report = evaluate_networks(G, None, val, spec)
    path = os.path.join(out, name + ".csv")
    report.write(path)
    paths.append(path)
    print(name, "mIoU %.3f" % report.miou)

# undefined classes (never present, never predicted) are kept apart from zeros
conf = ConfusionAccumulator(3).accumulate(torch.zeros(4, 4, dtype=torch.long),
                                          torch.zeros(4, 4, dtype=torch.long))
print("IoU of an absent class:", conf.iou(1))
print("strict mIoU %.2f, skip-undefined mIoU %.2f" % (conf.miou("strict"), conf.miou("skip_undefined")))

print(read_report(paths[1])["ious"])
chart = cmd_plot_iou(paths, os.path.join(out, "iou.svg"), ["perfect", "misses discs"])
print("chart:", chart, "and", os.path.splitext(chart)[0] + ".csv")
