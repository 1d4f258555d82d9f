"""Three-weight packing: pack the first two weights, then split on the third."""

from __future__ import annotations

from .core import EPS, Instance, Packing
from .packdisks import Metrics, pack


def split_next_fit(t, members):
    """Cut ``members`` (in order) into runs whose ``t`` totals stay <= 1."""
    runs, cur, T = [], [], 0.0
    for i in members:
        if cur and T + t[i] > 1.0 + EPS:
            runs.append(cur)
            cur, T = [], 0.0
        cur.append(i)
        T = T + t[i]
    if cur:
        runs.append(cur)
    return runs


def pack3(instance: Instance, debug=False):
    """Pack a 3-D instance; returns ``(Packing, Metrics)``.

    Stage one runs the linear 2-D packer on ``(s, l)`` with the instance's
    three-dimensional ``rho``.  Stage two splits every stage-one bin by
    next fit on ``t``, keeping the permuted order, so sub-bins stay
    contiguous.
    """
    if instance.dims != 3:
        raise ValueError("pack3 expects a 3-D instance")
    stage1, metrics = pack(instance.project(2), debug=debug)
    t = instance.weights[:, 2].tolist()
    bins = []
    for members in stage1.bins():
        bins.extend(split_next_fit(t, members.tolist()))
    packing = Packing.from_bins(bins)
    stage2 = Metrics(bins_opened=packing.q - stage1.q)
    return packing, metrics.merge(stage2)
