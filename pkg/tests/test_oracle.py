import numpy as np
import pytest
from hypothesis import given, settings

from vecpack import (Instance, InstanceTooLarge, lower_bound, optimal_bins,
                     pack, verify)
from vecpack.generators import DISTRIBUTIONS, generate

from conftest import instances


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        yield [[first]] + part


def brute_force_bins(inst):
    w = inst.weights
    best = 0 if inst.n == 0 else inst.n
    for part in set_partitions(list(range(inst.n))):
        if len(part) < best and all(np.all(w[b].sum(axis=0) <= 1 + 1e-9)
                                    for b in part):
            best = len(part)
    return best


def test_brute_force_sanity():
    # Bell(4) partitions of the alternating instance; two bins is optimal
    inst = Instance([(0.6, 0.2), (0.2, 0.6), (0.6, 0.2), (0.2, 0.6)])
    assert sum(1 for _ in set_partitions(list(range(4)))) == 15
    assert brute_force_bins(inst) == 2


def test_examples(trace4):
    assert optimal_bins(trace4).bins == 2
    assert optimal_bins(Instance([(0.9, 0.1), (0.9, 0.1)])).bins == 2
    assert optimal_bins(Instance(np.zeros((0, 2)))).bins == 0


def test_lower_bound_examples(trace4):
    assert lower_bound(trace4) == 2
    assert lower_bound(Instance([(0.1, 0.9)])) == 1
    assert lower_bound(Instance(np.zeros((0, 2)))) == 0
    assert lower_bound(Instance(np.zeros((3, 2)))) == 1


def test_limit():
    inst = Instance(np.full((15, 2), 0.1))
    with pytest.raises(InstanceTooLarge):
        optimal_bins(inst)
    assert optimal_bins(inst, limit=15).bins == 2


def test_witness_is_feasible(trace4):
    opt = optimal_bins(trace4)
    rep = verify(trace4, opt.packing())
    assert rep.feasible and rep.q == opt.bins


@pytest.mark.parametrize("seed", range(60))
def test_matches_brute_force(seed):
    dist = DISTRIBUTIONS[seed % 5]
    dims = 2 + seed % 2
    inst = generate(1 + seed % 8, seed, (0.3, 0.5, 0.7, 0.9)[seed % 4], dist, dims)
    assert optimal_bins(inst).bins == brute_force_bins(inst)


@settings(max_examples=100, deadline=None)
@given(instances(max_n=7))
def test_optimum_matches_brute_force_property(inst):
    opt = optimal_bins(inst)
    assert opt.bins == brute_force_bins(inst)
    assert verify(inst, opt.packing()).feasible


@settings(max_examples=100, deadline=None)
@given(instances(max_n=11))
def test_bound_chain(inst):
    opt = optimal_bins(inst).bins
    assert lower_bound(inst) <= opt <= pack(inst)[0].q


def test_deterministic():
    inst = generate(12, 5, 0.7, "anticorrelated")
    assert optimal_bins(inst) == optimal_bins(inst)
