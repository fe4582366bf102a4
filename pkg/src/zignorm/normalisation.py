"""Normal forms of zigzag diagrams, absolute and relative to a sink.

Given maps ``f_i: A_i -> T``, normalisation finds the smallest degeneracy
``d: N -> T`` through which every ``f_i`` factors.  It works height by height:

1. normalise each regular slice against the regular slices of the legs;
2. normalise each singular slice against the two cospan legs coming from the
   normalised regular slices and the singular slices of the legs landing there;
3. assemble the result into a diagram ``P`` with a parallel map ``P -> T``;
4. drop identity cospans of ``P`` that no leg hits, giving ``N``.

The normaliser is the composite ``N -> P -> T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import Diagram, Diagram0, DiagramMap, DiagramN, MapN, Sink, compose_maps, identity_map, is_identity
from .degeneracy import DegeneracyWitness, delete_identity_cospans, is_degeneracy
from .ordmaps import Monotone, identity, preimage_interval


@dataclass(frozen=True, eq=False)
class NormalisationResult:
    normal_form: Diagram
    normaliser: DiagramMap
    factorisations: tuple[DiagramMap, ...]
    simple: DiagramMap | None = None
    parallel: DiagramMap | None = None

    @property
    def witness(self) -> DegeneracyWitness:
        w = is_degeneracy(self.normaliser)
        assert w is not None
        return w

    def same_as(self, other: "NormalisationResult") -> bool:
        return (self.normal_form is other.normal_form and self.normaliser is other.normaliser
                and self.factorisations == other.factorisations)


def normalise(target: Diagram) -> NormalisationResult:
    """Absolute normal form: relative normalisation against the empty sink."""
    return normalise_relative(target, ())


def normalise_sink(sink: Sink) -> NormalisationResult:
    return normalise_relative(sink.target, sink.legs)


def normalise_relative(target: Diagram, legs: Sequence[DiagramMap]) -> NormalisationResult:
    legs = tuple(legs)
    for leg in legs:
        if leg.target is not target:
            raise ValueError(f"leg {leg!r} does not land in the target")
    return _normalise(target, legs)


@lru_cache(maxsize=1 << 15)
def _normalise(T: Diagram, legs: tuple[DiagramMap, ...]) -> NormalisationResult:
    if isinstance(T, Diagram0):
        ident = identity_map(T)
        return NormalisationResult(T, ident, legs)

    # Regular heights.
    reg_results = []
    for h in range(T.length + 1):
        reg_results.append(_normalise(T.regulars[h], tuple(f.regular_slices[h] for f in legs)))

    # Singular heights.
    sing_results = []
    for h in range(T.length):
        into = [
            compose_maps(reg_results[h].normaliser, T.forward[h]),
            compose_maps(reg_results[h + 1].normaliser, T.backward[h]),
        ]
        for f in legs:
            p, q = preimage_interval(f.singular, h)
            into.extend(f.singular_slices[p:q])
        sing_results.append(_normalise(T.singulars[h], tuple(into)))

    P = DiagramN(
        [r.normal_form for r in reg_results],
        [s.normal_form for s in sing_results],
        [s.factorisations[0] for s in sing_results],
        [s.factorisations[1] for s in sing_results],
    )
    parallel = MapN(P, T, identity(T.length),
                    [r.normaliser for r in reg_results], [s.normaliser for s in sing_results])

    # Factorisations of the legs through P keep their singular monotone.
    cursor = [2] * T.length
    into_P = []
    for k, f in enumerate(legs):
        sing = []
        for t in f.singular.values:
            sing.append(sing_results[t].factorisations[cursor[t]])
            cursor[t] += 1
        into_P.append(MapN(f.source, P, f.singular, [r.factorisations[k] for r in reg_results], sing))

    # Drop identity cospans of P that no leg hits.
    hit = set()
    for f in legs:
        hit.update(f.singular.values)
    removable = [h for h in range(P.length)
                 if h not in hit and is_identity(P.forward[h]) and is_identity(P.backward[h])]
    simple = delete_identity_cospans(P, removable)
    N = simple.source
    normaliser = compose_maps(simple, parallel)

    new_index = {h: j for j, h in enumerate(simple.singular.values)}
    first_regular = []
    sreg = simple.regular
    for h in range(P.length + 1):
        if sreg(h) == len(first_regular):
            first_regular.append(h)
    factorisations = tuple(
        MapN(g.source, N, Monotone(tuple(new_index[t] for t in g.singular.values), N.length),
             [g.regular_slices[h] for h in first_regular], g.singular_slices)
        for g in into_P
    )
    return NormalisationResult(N, normaliser, factorisations, simple, parallel)


def is_normal(d: Diagram) -> bool:
    return normalise(d).normal_form is d


def cache_clear():
    _normalise.cache_clear()
