"""
A third weight
==============

Packing on the first two weights and then cutting each bin by next fit on
the third keeps every bin feasible in all three dimensions.
"""

from vecpack import generate, optimal_bins, pack, pack3, verify

inst = generate(10, 4, 0.6, "uniform", dims=3)
stage1, _ = pack(inst.project(2))
packing, metrics = pack3(inst)
print("bins after the 2-D stage:", stage1.q)
print("bins after splitting on t:", packing.q)

report = verify(inst, packing)
for b in report.per_bin:
    print("  S=%.2f L=%.2f T=%.2f" % b.sums)
opt = optimal_bins(inst).bins
print("optimum", opt, " guarantee", round(2 * opt / (1 - inst.rho) + 2, 2))
