"""Seeded random diagrams and sinks for property tests and benchmarks.

Diagrams are grown one cospan at a time.  Each leg is either an identity, an
insertion of identity cospans, or a map picked at random among all maps into
a randomly drawn candidate.  The identity bias keeps plenty of redundant
structure around for normalisation to find.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .core import Diagram, Diagram0, DiagramMap, DiagramN, Generator, Sink, identity_map
from .degeneracy import insert_identity_cospans
from .oracle import maps_between
from .ordmaps import Monotone

GENERATOR_POOLS = (
    (Generator("p", 0), Generator("a", 1), Generator("m", 2), Generator("c", 3)),
    (Generator("p", 0), Generator("a", 1), Generator("b", 1), Generator("m", 2)),
    (Generator("p", 0), Generator("q", 0), Generator("a", 1), Generator("m", 2)),
    (Generator("p", 0), Generator("a", 1), Generator("m", 2), Generator("n", 2)),
)


@dataclass
class CorpusConfig:
    max_dimension: int = 3
    max_length: int = 3
    max_legs: int = 2
    identity_bias: float = 0.3
    attempts: int = 6


class Grower:
    def __init__(self, rng: random.Random, pool, config: CorpusConfig):
        self.rng = rng
        self.pool = pool
        self.config = config

    def length(self, dim: int) -> int:
        # keep high-dimensional diagrams short so brute force stays cheap
        top = self.config.max_length if dim <= 2 else max(1, self.config.max_length - 1)
        return self.rng.choice(range(top + 1))

    def diagram(self, dim: int, max_length: Optional[int] = None) -> Diagram:
        rng = self.rng
        if dim == 0:
            return Diagram0(rng.choice(self.pool))
        k = self.length(dim) if max_length is None else rng.randint(0, max_length)
        source = self.diagram(dim - 1, 1 if dim > 2 else None)
        cospans = []
        r = source
        for _ in range(k):
            fwd = self.map_out_of(r)
            bwd = self.map_into(fwd.target, r, fwd)
            cospans.append((fwd, bwd))
            r = bwd.source
        return DiagramN.from_cospans(source, cospans)

    def map_out_of(self, r: Diagram) -> DiagramMap:
        rng = self.rng
        roll = rng.random()
        if roll < self.config.identity_bias:
            return identity_map(r)
        if roll < self.config.identity_bias + 0.15 and r.dimension > 0 and r.length < self.config.max_length:
            pos = rng.randint(0, r.length)
            values = tuple(j if j < pos else j + 1 for j in range(r.length))
            return insert_identity_cospans(r, Monotone(values, r.length + 1))
        for _ in range(self.config.attempts):
            cand = self.diagram(r.dimension, 2)
            options = maps_between(r, cand)
            if options:
                return rng.choice(options)
        return identity_map(r)

    def map_into(self, s: Diagram, previous: Diagram, fwd: DiagramMap) -> DiagramMap:
        rng = self.rng
        roll = rng.random()
        if roll < self.config.identity_bias:
            return identity_map(s)
        if roll < self.config.identity_bias + 0.3:
            return rng.choice(maps_between(previous, s) or (fwd,))
        for _ in range(self.config.attempts):
            cand = self.diagram(s.dimension, 2)
            options = maps_between(cand, s)
            if options:
                return rng.choice(options)
        return identity_map(s)

    def leg(self, target: Diagram) -> Optional[DiagramMap]:
        rng = self.rng
        for _ in range(self.config.attempts):
            if target.dimension > 0 and rng.random() < 0.3:
                source = target.regulars[rng.randrange(len(target.regulars))].identity()
            else:
                source = self.diagram(target.dimension, 2)
            options = maps_between(source, target)
            if options:
                return rng.choice(options)
        return None


def random_diagram(seed: int, dimension: int, config: Optional[CorpusConfig] = None) -> Diagram:
    rng = random.Random(seed)
    config = config or CorpusConfig()
    return Grower(rng, rng.choice(GENERATOR_POOLS), config).diagram(dimension)


def random_sink(seed: int, config: Optional[CorpusConfig] = None) -> Sink:
    """A reproducible random sink; the same seed always gives the same sink."""
    rng = random.Random(seed)
    config = config or CorpusConfig()
    grower = Grower(rng, rng.choice(GENERATOR_POOLS), config)
    dim = rng.randint(1, config.max_dimension)
    target = grower.diagram(dim)
    legs = []
    for _ in range(rng.randint(0, config.max_legs)):
        leg = grower.leg(target)
        if leg is not None:
            legs.append(leg)
    return Sink(target, tuple(legs))


def corpus(seed: int, count: int, config: Optional[CorpusConfig] = None) -> list[Sink]:
    master = random.Random(seed)
    return [random_sink(master.getrandbits(64), config) for _ in range(count)]
