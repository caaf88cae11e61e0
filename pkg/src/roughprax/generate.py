"""Seeded random generators for proto-transitive relations.

A reflexive relation is proto-transitive exactly when its symmetric kernel
is an equivalence, so the generators start from a random equivalence and
only add pairs whose reverse is absent.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Optional

from roughprax.relation import BinaryRelation, Universe

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorConfig:
    size: int
    seed: int
    block_profile: Optional[tuple[int, ...]] = None
    asym_pairs: int = 0

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("size must be at least 1")
        if not 0 <= self.asym_pairs <= self.size * (self.size - 1):
            raise ValueError("asym_pairs must lie in [0, size*(size-1)]")
        if self.block_profile is not None:
            profile = tuple(self.block_profile)
            if any(b < 1 for b in profile) or sum(profile) != self.size:
                raise ValueError("block_profile must be positive sizes summing to size")
            object.__setattr__(self, "block_profile", profile)


def default_universe(size: int) -> Universe:
    return Universe(tuple(f"e{i}" for i in range(size)))


def _blocks(cfg: GeneratorConfig, rng: random.Random) -> list[list[int]]:
    order = list(range(cfg.size))
    rng.shuffle(order)
    if cfg.block_profile is not None:
        out, start = [], 0
        for b in cfg.block_profile:
            out.append(sorted(order[start:start + b]))
            start += b
        return out
    k = rng.randint(1, cfg.size)
    labels = [rng.randrange(k) for _ in order]
    groups: dict[int, list[int]] = {}
    for x, lab in zip(order, labels):
        groups.setdefault(lab, []).append(x)
    return [sorted(g) for _, g in sorted(groups.items())]


def _kernel_and_asym(cfg: GeneratorConfig, rng: random.Random) -> tuple[list[tuple[int, int]], set[tuple[int, int]]]:
    blocks = _blocks(cfg, rng)
    block_of = {x: i for i, b in enumerate(blocks) for x in b}
    kernel = [(x, y) for b in blocks for x in b for y in b]
    cross = [(x, y) for x in range(cfg.size) for y in range(x + 1, cfg.size) if block_of[x] != block_of[y]]
    want = cfg.asym_pairs
    if want > len(cross):
        log.debug("only %d one-directional pairs fit this partition; asked for %d", len(cross), want)
        want = len(cross)
    asym = set()
    for x, y in rng.sample(cross, want):
        asym.add((x, y) if rng.random() < 0.5 else (y, x))
    return kernel, asym


def generate_prax(cfg: GeneratorConfig) -> BinaryRelation:
    rng = random.Random(cfg.seed)
    kernel, asym = _kernel_and_asym(cfg, rng)
    u = default_universe(cfg.size)
    diag = [(x, x) for x in range(cfg.size)]
    return BinaryRelation.from_pairs(u, [*kernel, *asym, *diag])


def generate_pras(cfg: GeneratorConfig) -> BinaryRelation:
    """Like :func:`generate_prax`, without the reflexive closure and with
    each diagonal pair dropped at random."""
    rng = random.Random(cfg.seed)
    kernel, asym = _kernel_and_asym(cfg, rng)
    pairs = [(x, y) for x, y in kernel if x != y or rng.random() < 0.5]
    return BinaryRelation.from_pairs(default_universe(cfg.size), [*pairs, *asym])


def random_relation(size: int, rng: random.Random, density: Optional[float] = None) -> BinaryRelation:
    """An arbitrary relation; each pair is present with probability ``density``."""
    p = rng.random() if density is None else density
    pairs = [(x, y) for x in range(size) for y in range(size) if rng.random() < p]
    return BinaryRelation.from_pairs(default_universe(size), pairs)
