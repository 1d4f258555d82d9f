"""Seeded random instance families.

Every family draws weights in ``(0, rho_max]``:

``uniform``
    each weight i.i.d. uniform.
``anticorrelated``
    one weight in ``(0.9 rho_max, rho_max]``, the other ``rho_max * u**2``;
    the heavy side is a fair coin flip.
``correlated``
    both weights equal up to +/-10% jitter; a quarter are exact ties.
``s-only`` / ``l-only``
    every item s-heavy / every item l-heavy.

A third weight, when requested, is always uniform.
"""

from __future__ import annotations

import numpy as np

from .core import Instance

DISTRIBUTIONS = ("uniform", "anticorrelated", "correlated", "s-only", "l-only")


def _unit(rng, size):
    # uniform on (0, 1]
    return 1.0 - rng.random(size)


def generate_weights(n, seed, rho_max=0.5, dist="uniform", dims=2):
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0 < rho_max <= 1:
        raise ValueError("rho_max must lie in (0, 1]")
    if dist not in DISTRIBUTIONS:
        raise ValueError(f"unknown distribution {dist!r}")
    if dims not in (2, 3):
        raise ValueError("dims must be 2 or 3")
    rng = np.random.default_rng(seed)
    if dist == "uniform":
        w = rho_max * _unit(rng, (n, 2))
    elif dist == "anticorrelated":
        heavy = rho_max * (1.0 - 0.1 * rng.random(n))
        light = rho_max * _unit(rng, n) ** 2
        flip = rng.random(n) < 0.5
        w = np.column_stack([np.where(flip, heavy, light),
                             np.where(flip, light, heavy)])
    elif dist == "correlated":
        base = rho_max * _unit(rng, n)
        jitter = rng.uniform(-0.1, 0.1, n)
        jitter[rng.random(n) < 0.25] = 0.0
        other = np.minimum(base * (1.0 + jitter), rho_max)
        flip = rng.random(n) < 0.5
        w = np.column_stack([np.where(flip, base, other),
                             np.where(flip, other, base)])
    else:
        big = rho_max * _unit(rng, n)
        small = big * rng.random(n)
        small = np.minimum(small, np.nextafter(big, 0.0))
        w = np.column_stack([big, small] if dist == "s-only" else [small, big])
    if dims == 3:
        w = np.column_stack([w, rho_max * _unit(rng, n)])
    return w


def generate(n, seed, rho_max=0.5, dist="uniform", dims=2) -> Instance:
    return Instance(generate_weights(n, seed, rho_max, dist, dims))
