import numpy as np
import pytest
from hypothesis import given, settings

from vecpack import Instance, Instance3, optimal_bins, pack, pack3, verify
from vecpack.threedim import split_next_fit

from conftest import instances


def test_empty():
    p, m = pack3(Instance3(np.zeros((0, 3))))
    assert p.q == 0 and m.bins_opened == 0


def test_third_weight_splits_bin():
    inst = Instance3([(0.4, 0.3, 0.9), (0.4, 0.3, 0.9)])
    stage1, _ = pack(inst.project(2))
    assert stage1.q == 1
    p, m = pack3(inst)
    assert p.q == 2 and m.bins_opened == 2


def test_third_weight_fits():
    p, _ = pack3(Instance3([(0.3, 0.3, 0.2), (0.3, 0.3, 0.2)]))
    assert p.q == 1


def test_split_next_fit():
    t = [0.6, 0.5, 0.4, 0.1, 0.7]
    assert split_next_fit(t, [0, 1, 2, 3, 4]) == [[0], [1, 2, 3], [4]]
    assert split_next_fit(t, []) == []


def test_requires_three_dims():
    with pytest.raises(ValueError):
        pack3(Instance([(0.1, 0.1)]))
    with pytest.raises(ValueError):
        Instance3([(0.1, 0.1)])


@settings(max_examples=200, deadline=None)
@given(instances(max_n=40, dims=3))
def test_feasible_and_refines_stage_one(inst):
    p, m = pack3(inst, debug=True)
    assert verify(inst, p).feasible
    stage1, _ = pack(inst.project(2))
    # every stage-2 bin sits inside one stage-1 bin, in the same order
    owner = {}
    for b, members in enumerate(stage1.bins()):
        for i in members.tolist():
            owner[i] = b
    for members in p.bins():
        assert len({owner[i] for i in members.tolist()}) == 1
    assert np.array_equal(p.order, stage1.order)
    assert m.bins_opened == p.q


@settings(max_examples=100, deadline=None)
@given(instances(max_n=9, dims=3, rho_cap=0.95))
def test_bound(inst):
    if inst.rho >= 1:
        return
    p, _ = pack3(inst)
    opt = optimal_bins(inst).bins
    assert p.q <= 2 * opt / (1 - inst.rho) + 2 + 1e-9
