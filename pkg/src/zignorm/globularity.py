"""Globular diagrams and regularly normalising maps.

A map is globular when all its regular slices are isomorphisms and its
singular slices are globular.  A diagram is globular when its slices are
globular diagrams and its cospan legs are globular maps.  These are the
diagrams that come from composing globular cells.
"""

from __future__ import annotations

from functools import lru_cache

from .core import Diagram, Diagram0, DiagramMap, Map0, is_isomorphism
from .normalisation import normalise


@lru_cache(maxsize=1 << 15)
def is_globular_map(f: DiagramMap) -> bool:
    if isinstance(f, Map0):
        return True
    return all(is_isomorphism(s) for s in f.regular_slices) and all(
        is_globular_map(s) for s in f.singular_slices
    )


@lru_cache(maxsize=1 << 15)
def is_globular(d: Diagram) -> bool:
    if isinstance(d, Diagram0):
        return True
    return (
        all(is_globular(x) for x in d.regulars + d.singulars)
        and all(is_globular_map(m) for m in d.forward + d.backward)
    )


def is_normalising(f: DiagramMap) -> bool:
    """``f`` is the normaliser of its target."""
    return normalise(f.target).normaliser is f


@lru_cache(maxsize=1 << 15)
def is_regularly_normalising(f: DiagramMap) -> bool:
    if isinstance(f, Map0):
        return True
    return all(is_normalising(s) for s in f.regular_slices) and all(
        is_regularly_normalising(s) for s in f.singular_slices
    )
