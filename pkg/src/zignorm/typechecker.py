"""Type checking of diagrams against a signature, one piece at a time.

Every point of singular content has an address: the list of singular heights
leading down to it.  The piece at an address keeps just that point together
with whatever of the rest of the diagram maps onto it.  A diagram is well
typed when every piece normalises to the typing diagram of its generator.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .core import (
    Diagram, Diagram0, DiagramMap, DiagramN, Generator, Map0, MapN, compose_maps, generators_of, lift,
)
from .errors import AddressError, GlobularityError, SignatureError, ValidationError
from .globularity import is_globular
from .normalisation import normalise
from .ordmaps import Monotone

log = logging.getLogger(__name__)

ContentAddress = tuple[int, ...]


def singular_content(d: Diagram) -> list[tuple[ContentAddress, Generator]]:
    """Every singular point with its address, in lexicographic order."""
    return list(_content(d))


@lru_cache(maxsize=1 << 14)
def _content(d: Diagram) -> tuple[tuple[ContentAddress, Generator], ...]:
    if isinstance(d, Diagram0):
        return (((), d.generator),)
    return tuple(((h,) + a, g) for h, s in enumerate(d.singulars) for a, g in _content(s))


def generator_at(d: Diagram, address: Sequence[int]) -> Generator:
    for depth, h in enumerate(address):
        if isinstance(d, Diagram0) or not 0 <= h < d.length:
            raise AddressError(f"address {tuple(address)} leaves the diagram at depth {depth}")
        d = d.singulars[h]
    if not isinstance(d, Diagram0):
        raise AddressError(f"address {tuple(address)} is too short")
    return d.generator


# -- regions and restriction ------------------------------------------------------


@dataclass(frozen=True)
class Region:
    """A window ``[lo, hi)`` of singular heights with sub-regions in each slice.

    ``regulars`` covers regular heights ``lo..hi`` and ``singulars`` covers
    singular heights ``lo..hi-1``.  On a 0-diagram the region is ``None``
    (the whole point).
    """
    lo: int
    hi: int
    regulars: tuple[Optional["Region"], ...]
    singulars: tuple[Optional["Region"], ...]

    def regular(self, u: int) -> Optional["Region"]:
        return self.regulars[u - self.lo]

    def singular(self, t: int) -> Optional["Region"]:
        return self.singulars[t - self.lo]


def address_region(d: Diagram, address: Sequence[int]) -> Optional[Region]:
    if isinstance(d, Diagram0):
        if address:
            raise AddressError("address continues below a 0-diagram")
        return None
    if not address:
        raise AddressError(f"address stops at a {d.dimension}-diagram")
    h, rest = address[0], tuple(address[1:])
    if not 0 <= h < d.length:
        raise AddressError(f"height {h} outside a diagram of length {d.length}")
    inner = address_region(d.singulars[h], rest)
    return Region(h, h + 1, (preimage(inner, d.forward[h]), preimage(inner, d.backward[h])), (inner,))


@lru_cache(maxsize=1 << 15)
def preimage(region: Optional[Region], f: DiagramMap) -> Optional[Region]:
    """The part of ``f.source`` that ``f`` sends into ``region``."""
    if isinstance(f, Map0):
        return None
    values = f.singular.values
    lo = sum(1 for v in values if v < region.lo)
    hi = sum(1 for v in values if v < region.hi)
    singulars = tuple(preimage(region.singular(values[t]), f.singular_slices[t]) for t in range(lo, hi))
    reg = f.regular
    regulars = []
    for u in range(lo, hi + 1):
        hits = [i for i in range(region.lo, region.hi + 1) if reg(i) == u]
        if hits:
            i = hits[0]
            regulars.append(preimage(region.regular(i), f.regular_slices[i]))
        else:
            # strictly inside a run of source heights sent to the same target height
            i = values[u]
            via = compose_maps(f.source.forward[u], f.singular_slices[u])
            regulars.append(preimage(region.singular(i), via))
    return Region(lo, hi, tuple(regulars), tuple(singulars))


@lru_cache(maxsize=1 << 15)
def restrict(d: Diagram, region: Optional[Region]) -> Diagram:
    if isinstance(d, Diagram0):
        return d
    regs = [restrict(d.regulars[u], region.regular(u)) for u in range(region.lo, region.hi + 1)]
    forward, backward = [], []
    for t in range(region.lo, region.hi):
        fwd = restrict_map(d.forward[t], region.singular(t))
        bwd = restrict_map(d.backward[t], region.singular(t))
        if fwd.source is not regs[t - region.lo] or bwd.source is not regs[t + 1 - region.lo]:
            raise ValidationError("region is not closed under the cospan", [f"height {t}"])
        forward.append(fwd)
        backward.append(bwd)
    return DiagramN(regs, [f.target for f in forward], forward, backward)


@lru_cache(maxsize=1 << 15)
def restrict_map(f: DiagramMap, region: Optional[Region]) -> DiagramMap:
    """Restrict ``f`` to ``preimage(region) -> region``."""
    if isinstance(f, Map0):
        return f
    src_region = preimage(region, f)
    source = restrict(f.source, src_region)
    target = restrict(f.target, region)
    values = f.singular.values
    mono = Monotone(tuple(values[t] - region.lo for t in range(src_region.lo, src_region.hi)), target.length)
    singular_slices = [restrict_map(f.singular_slices[t], region.singular(values[t]))
                       for t in range(src_region.lo, src_region.hi)]
    regular_slices = [restrict_map(f.regular_slices[i], region.regular(i))
                      for i in range(region.lo, region.hi + 1)]
    return MapN(source, target, mono, regular_slices, singular_slices)


def extract_piece(d: Diagram, address: Sequence[int]) -> Diagram:
    """The sub-diagram around one point of singular content."""
    return restrict(d, address_region(d, tuple(address)))


# -- signatures -------------------------------------------------------------------


class Signature:
    """Generators together with their typing diagrams."""

    def __init__(self, entries: Iterable[tuple[Generator, Diagram]] = ()):
        self._entries: dict[str, tuple[Generator, Diagram]] = {}
        for g, d in entries:
            self.add(g, d)
        self.check_closed()

    def add(self, g: Generator, typing: Diagram):
        if g.name in self._entries:
            raise SignatureError(f"generator {g.name} declared twice")
        if typing.dimension != g.dimension:
            raise SignatureError(f"typing diagram of {g.name} has dimension {typing.dimension}")
        content = singular_content(typing)
        if [x for _, x in content if x.dimension == g.dimension] != [g]:
            raise SignatureError(f"typing diagram of {g.name} must contain it exactly once at the top")
        if not is_globular(typing):
            raise SignatureError(f"typing diagram of {g.name} is not globular")
        if not normalise(typing).normal_form is typing:
            log.warning("typing diagram of %s is not in normal form", g.name)
        self._entries[g.name] = (g, typing)

    def check_closed(self):
        for g, d in self._entries.values():
            for x in generators_of(d):
                have = self._entries.get(x.name)
                if have is None or have[0] != x:
                    raise SignatureError(f"typing diagram of {g.name} uses undeclared generator {x!r}")

    def __contains__(self, g: Generator) -> bool:
        entry = self._entries.get(g.name)
        return entry is not None and entry[0] == g

    def __iter__(self):
        return iter(g for g, _ in self._entries.values())

    def __len__(self):
        return len(self._entries)

    def typing(self, g: Generator) -> Diagram:
        entry = self._entries.get(g.name)
        if entry is None or entry[0] != g:
            raise SignatureError(f"unknown generator {g!r}")
        return entry[1]

    def entries(self) -> list[tuple[Generator, Diagram]]:
        return list(self._entries.values())


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    address: Optional[ContentAddress] = None
    generator: Optional[Generator] = None
    reason: str = ""

    def __bool__(self):
        return self.accepted


def typecheck(d: Diagram, signature: Signature) -> Verdict:
    """Accept ``d`` if every piece normalises to the typing diagram of its generator.

    A generator missing from the signature rejects at the first address where
    it occurs as content.  Undeclared labels that never occur as content, and
    labels clashing with a declared generator of the same name, raise
    :class:`SignatureError`.
    """
    content = singular_content(d)
    as_content = {g for _, g in content}
    for g in generators_of(d):
        known = signature._entries.get(g.name)
        if known is not None and known[0] != g:
            raise SignatureError(f"{g!r} clashes with declared {known[0]!r}")
        if known is None and g not in as_content:
            raise SignatureError(f"unknown generator {g!r}")
    if not is_globular(d):
        raise GlobularityError("type checking needs a globular diagram")
    for address, g in content:
        if g not in signature:
            return Verdict(False, address, g, f"unknown generator {g.name}")
        piece = extract_piece(d, address)
        normal = normalise(piece).normal_form
        if normal is not lift(signature.typing(g), d.dimension):
            return Verdict(False, address, g, f"piece does not normalise to the type of {g.name}")
    return Verdict(True)
