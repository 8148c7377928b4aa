"""Random valid abstract specifications for property sweeps."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .errors import InvalidInput
from .model import FieldSpec, build_spec


@dataclass(frozen=True)
class SweepConfig:
    primes: tuple[int, ...] = (2, 3, 5)
    max_q: int = 16
    max_poles: int = 3
    max_pole_degree: int = 3
    max_pole_mult: int = 10
    max_zeros: int = 3
    max_zero_degree: int = 3
    max_zero_mult: int = 10
    max_genus: int | None = None


def _coprime(rng: random.Random, p: int, hi: int) -> int:
    while True:
        v = rng.randint(1, hi)
        if v % p:
            return v


def random_spec(rng: random.Random, cfg: SweepConfig = SweepConfig()) -> FieldSpec:
    """Draw until the data satisfies every hypothesis and has a degree-one place."""
    while True:
        p = rng.choice([c for c in cfg.primes if c <= cfg.max_q])
        n_max = 1
        while p ** (n_max + 1) <= cfg.max_q:
            n_max += 1
        n = rng.randint(1, n_max)
        s = rng.randint(1, cfg.max_poles)
        poles = [(_coprime(rng, p, cfg.max_pole_mult), rng.randint(1, cfg.max_pole_degree))
                 for _ in range(s)]
        zeros = [(rng.randint(1, cfg.max_zero_mult), rng.randint(1, cfg.max_zero_degree))
                 for _ in range(rng.randint(0, cfg.max_zeros))]
        n0 = sum(m * e for m, e in zeros) - sum(a * d for a, d in poles)
        if n0 > 0 and gcd(n0, p) != 1:
            continue
        try:
            spec = build_spec(p, n, poles, zeros)
        except InvalidInput:
            continue
        if not spec.degree_one_places():
            continue
        if cfg.max_genus is not None and spec.genus > cfg.max_genus:
            continue
        return spec


def sweep(seed: int, count: int, cfg: SweepConfig = SweepConfig()) -> list[FieldSpec]:
    rng = random.Random(seed)
    return [random_spec(rng, cfg) for _ in range(count)]
