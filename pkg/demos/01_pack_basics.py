"""
Packing files onto disks
========================

Each file has a size and an expected load.  We normalize both by the disk
capacities, pack with the linear-time packer and look at the bins.
"""

import numpy as np

from vecpack import RawInstance, normalize, pack, verify

# sizes in GB and loads in requests/s; every disk holds 500 GB and 1200 req/s
raw = RawInstance(
    items=[(300, 100), (80, 700), (250, 150), (60, 900), (120, 300), (40, 200)],
    cap_s=500,
    cap_l=1200,
)
inst = normalize(raw)
print(inst)
print(np.round(inst.weights, 3))

# pack returns the bins as a permutation plus bin boundaries
packing, metrics = pack(inst, debug=True)
for k, members in enumerate(packing.bins(), start=1):
    print(f"disk {k}: files {(members + 1).tolist()}")

# verify recomputes every bin total independently of the packer
report = verify(inst, packing)
for k, b in enumerate(report.per_bin, start=1):
    print(f"disk {k}: size {b.S:.2f}  load {b.L:.2f}  complete={b.complete}")
print("feasible:", report.feasible, " case:", report.case_class)

# the packer only ever swapped items inside the array
print(metrics)
