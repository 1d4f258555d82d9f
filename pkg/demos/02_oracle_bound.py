"""
How far from optimal?
=====================

For small instances the exact optimum is cheap to compute, so we can watch
the guarantee q <= C*/(1 - rho) + 1 at work and compare with first fit.
"""

from vecpack import (generate, lower_bound, optimal_bins, pack, pack_ffd,
                     pack_first_fit)

print(f"{'rho':>6} {'C*':>3} {'linear':>6} {'ff':>3} {'ffd':>3} {'bound':>6}")
for seed, rho_max in enumerate([0.1, 0.2, 0.3, 0.5, 0.7, 0.9]):
    inst = generate(12, seed, rho_max, "anticorrelated")
    opt = optimal_bins(inst).bins
    q = pack(inst)[0].q
    bound = opt / (1 - inst.rho) + 1
    print(f"{inst.rho:6.3f} {opt:3d} {q:6d} {pack_first_fit(inst).q:3d} "
          f"{pack_ffd(inst).q:3d} {bound:6.2f}")

# with small items the volume bound is nearly tight and so is the packer
inst = generate(2000, 0, 0.05, "uniform")
print("n=2000, rho=%.3f: lower bound %d, linear %d"
      % (inst.rho, lower_bound(inst), pack(inst)[0].q))
