"""Zigzag diagrams and the maps between them.

A 0-diagram is a single generator.  An n-diagram is a zigzag of
(n-1)-diagrams::

    R0 -> S0 <- R1 -> S1 <- ... -> S(k-1) <- Rk

Base category: generators form a thin, skeletal category in which
``g -> h`` exists when ``g == h`` or ``g`` has strictly smaller dimension.

Every diagram and map is hash-consed.  Building the same structure twice gives
back the same object, so structural equality is object identity and costs
nothing.  Instances are immutable.
"""

from __future__ import annotations

import os
import weakref
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import ordmaps
from .errors import CompositionError, DimensionMismatchError, ValidationError
from .ordmaps import Monotone

_strict = [os.environ.get("ZIGNORM_STRICT", "") not in ("", "0")]


def set_strict(flag: bool) -> bool:
    """Turn eager validation of every constructed map on or off.

    Returns the previous setting.
    """
    old = _strict[0]
    _strict[0] = bool(flag)
    return old


def is_strict() -> bool:
    return _strict[0]


@dataclass(frozen=True, order=True)
class Generator:
    name: str
    dimension: int

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError("generator names are non-empty strings")
        if not isinstance(self.dimension, int) or self.dimension < 0:
            raise ValueError(f"bad dimension {self.dimension!r} for {self.name}")

    def __repr__(self):
        return f"{self.name}:{self.dimension}"


def generator_leq(g: Generator, h: Generator) -> bool:
    """Whether the base category has an arrow ``g -> h``."""
    return g == h or g.dimension < h.dimension


_table: weakref.WeakValueDictionary = weakref.WeakValueDictionary()


class _Interned:
    __slots__ = ("__weakref__",)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (type(self), self._fields())

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


def _intern(cls, key, build):
    obj = _table.get(key)
    if obj is None:
        obj = object.__new__(cls)
        build(obj)
        _table[key] = obj
    return obj


# -- diagrams -----------------------------------------------------------------


class Diagram(_Interned):
    __slots__ = ()
    dimension: int

    def identity(self) -> "DiagramN":
        """The length-0 zigzag over this diagram, one dimension up."""
        return DiagramN((self,), (), (), ())


class Diagram0(Diagram):
    __slots__ = ("generator",)
    dimension = 0

    def __new__(cls, generator: Generator):
        if not isinstance(generator, Generator):
            raise TypeError(f"expected a Generator, got {generator!r}")
        return _intern(cls, (cls, generator), lambda o: object.__setattr__(o, "generator", generator))

    def _fields(self):
        return (self.generator,)

    def __repr__(self):
        return f"<{self.generator!r}>"


class DiagramN(Diagram):
    __slots__ = ("regulars", "singulars", "forward", "backward", "dimension")

    def __new__(cls, regulars, singulars, forward, backward):
        regulars, singulars = tuple(regulars), tuple(singulars)
        forward, backward = tuple(forward), tuple(backward)
        key = (cls, regulars, singulars, forward, backward)
        obj = _table.get(key)
        if obj is not None:
            return obj
        _check_zigzag(regulars, singulars, forward, backward)
        obj = object.__new__(cls)
        set_ = object.__setattr__
        set_(obj, "regulars", regulars)
        set_(obj, "singulars", singulars)
        set_(obj, "forward", forward)
        set_(obj, "backward", backward)
        set_(obj, "dimension", regulars[0].dimension + 1)
        _table[key] = obj
        return obj

    @classmethod
    def from_cospans(cls, source: Diagram, cospans: Iterable[tuple["DiagramMap", "DiagramMap"]]) -> "DiagramN":
        """Build from the source object and a list of ``(forward, backward)`` legs."""
        regulars, singulars, forward, backward = [source], [], [], []
        for fwd, bwd in cospans:
            forward.append(fwd)
            backward.append(bwd)
            singulars.append(fwd.target)
            regulars.append(bwd.source)
        return cls(regulars, singulars, forward, backward)

    def _fields(self):
        return (self.regulars, self.singulars, self.forward, self.backward)

    @property
    def length(self) -> int:
        return len(self.singulars)

    @property
    def source(self) -> Diagram:
        return self.regulars[0]

    @property
    def target(self) -> Diagram:
        return self.regulars[-1]

    def cospan(self, i: int) -> tuple["DiagramMap", "DiagramMap"]:
        return self.forward[i], self.backward[i]

    def __repr__(self):
        return f"<{self.dimension}-diagram of length {self.length}>"


def _check_zigzag(regulars, singulars, forward, backward):
    if not regulars:
        raise ValidationError("a zigzag needs at least one regular object")
    k = len(singulars)
    if len(regulars) != k + 1 or len(forward) != k or len(backward) != k:
        raise ValidationError(
            f"arity mismatch: {len(regulars)} regular, {k} singular, "
            f"{len(forward)} forward, {len(backward)} backward"
        )
    dim = regulars[0].dimension
    for name, items, kind in (("regular", regulars, Diagram), ("singular", singulars, Diagram),
                              ("forward", forward, DiagramMap), ("backward", backward, DiagramMap)):
        for i, x in enumerate(items):
            if not isinstance(x, kind):
                raise ValidationError(f"expected {kind.__name__}, got {type(x).__name__}", [f"{name} {i}"])
            if x.dimension != dim:
                raise ValidationError(f"dimension {x.dimension}, expected {dim}", [f"{name} {i}"])
    for i in range(k):
        if forward[i].source is not regulars[i] or forward[i].target is not singulars[i]:
            raise ValidationError("endpoints do not match the zigzag", [f"forward {i}"])
        if backward[i].source is not regulars[i + 1] or backward[i].target is not singulars[i]:
            raise ValidationError("endpoints do not match the zigzag", [f"backward {i}"])


# -- maps ---------------------------------------------------------------------


class DiagramMap(_Interned):
    __slots__ = ()
    source: Diagram
    target: Diagram
    dimension: int


class Map0(DiagramMap):
    __slots__ = ("source", "target")
    dimension = 0

    def __new__(cls, source: Diagram0, target: Diagram0):
        key = (cls, source, target)
        obj = _table.get(key)
        if obj is not None:
            return obj
        if not (isinstance(source, Diagram0) and isinstance(target, Diagram0)):
            raise DimensionMismatchError("0-maps go between 0-diagrams")
        if not generator_leq(source.generator, target.generator):
            raise ValidationError(f"no arrow {source.generator!r} -> {target.generator!r}")
        obj = object.__new__(cls)
        object.__setattr__(obj, "source", source)
        object.__setattr__(obj, "target", target)
        _table[key] = obj
        return obj

    def _fields(self):
        return (self.source, self.target)

    def __repr__(self):
        return f"<{self.source.generator!r} -> {self.target.generator!r}>"


class MapN(DiagramMap):
    """A map of zigzags, given by its singular monotone and its slices.

    ``regular_slices[i]`` goes ``source.regulars[regular(i)] -> target.regulars[i]``
    and ``singular_slices[j]`` goes
    ``source.singulars[j] -> target.singulars[singular(j)]``.
    """

    __slots__ = ("source", "target", "singular", "regular_slices", "singular_slices", "dimension")

    def __new__(cls, source, target, singular, regular_slices, singular_slices):
        if not isinstance(singular, Monotone):
            singular = Monotone(tuple(singular), target.length)
        regular_slices, singular_slices = tuple(regular_slices), tuple(singular_slices)
        key = (cls, source, target, singular, regular_slices, singular_slices)
        obj = _table.get(key)
        if obj is not None:
            return obj
        _check_map_shape(source, target, singular, regular_slices, singular_slices)
        obj = object.__new__(cls)
        set_ = object.__setattr__
        set_(obj, "source", source)
        set_(obj, "target", target)
        set_(obj, "singular", singular)
        set_(obj, "regular_slices", regular_slices)
        set_(obj, "singular_slices", singular_slices)
        set_(obj, "dimension", source.dimension)
        if _strict[0]:
            _check_commutation(obj)
        _table[key] = obj
        return obj

    def _fields(self):
        return (self.source, self.target, self.singular, self.regular_slices, self.singular_slices)

    @property
    def regular(self) -> Monotone:
        return ordmaps.wraith_dual(self.singular)

    def __repr__(self):
        return f"<{self.dimension}-map {list(self.singular.values)}: {self.source!r} -> {self.target!r}>"


def _check_map_shape(source, target, singular, regular_slices, singular_slices):
    if not (isinstance(source, DiagramN) and isinstance(target, DiagramN)):
        raise DimensionMismatchError("n-maps go between n-diagrams with n >= 1")
    if source.dimension != target.dimension:
        raise DimensionMismatchError(f"source has dimension {source.dimension}, target {target.dimension}")
    if singular.source_size != source.length or singular.target_size != target.length:
        raise ValidationError(
            f"monotone {singular} does not go [{source.length}] -> [{target.length}]", ["monotone"]
        )
    if len(regular_slices) != target.length + 1:
        raise ValidationError(f"expected {target.length + 1} regular slices", ["regular slices"])
    if len(singular_slices) != source.length:
        raise ValidationError(f"expected {source.length} singular slices", ["singular slices"])
    reg = ordmaps.wraith_dual(singular)
    for i, s in enumerate(regular_slices):
        if not isinstance(s, DiagramMap):
            raise ValidationError(f"expected a map, got {type(s).__name__}", [f"regular slice {i}"])
        if s.source is not source.regulars[reg(i)] or s.target is not target.regulars[i]:
            raise ValidationError("slice endpoints are wrong", [f"regular slice {i}"])
    for j, s in enumerate(singular_slices):
        if not isinstance(s, DiagramMap):
            raise ValidationError(f"expected a map, got {type(s).__name__}", [f"singular slice {j}"])
        if s.source is not source.singulars[j] or s.target is not target.singulars[singular(j)]:
            raise ValidationError("slice endpoints are wrong", [f"singular slice {j}"])


def _check_commutation(f: MapN):
    """Raise unless every square, triangle and wedge of ``f`` commutes."""
    X, Y = f.source, f.target
    rs, ss = f.regular_slices, f.singular_slices
    for i in range(Y.length):
        p, q = ordmaps.preimage_interval(f.singular, i)
        if p < q:
            if compose_maps(rs[i], Y.forward[i]) is not compose_maps(X.forward[p], ss[p]):
                raise ValidationError("left square does not commute", [f"height {i}"])
            if compose_maps(rs[i + 1], Y.backward[i]) is not compose_maps(X.backward[q - 1], ss[q - 1]):
                raise ValidationError("right square does not commute", [f"height {i}"])
            for j in range(p, q - 1):
                if compose_maps(X.backward[j], ss[j]) is not compose_maps(X.forward[j + 1], ss[j + 1]):
                    raise ValidationError(f"triangle at source height {j} does not commute", [f"height {i}"])
        elif compose_maps(rs[i], Y.forward[i]) is not compose_maps(rs[i + 1], Y.backward[i]):
            raise ValidationError("wedge over an unhit height does not commute", [f"height {i}"])


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    path: tuple[str, ...] = ()
    message: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return f"invalid at {' / '.join(self.path) or 'top level'}: {self.message}"


def _report(check, x) -> ValidationReport:
    try:
        check(x, ())
    except ValidationError as e:
        return ValidationReport(False, e.path, e.message)
    return ValidationReport(True)


def validate_diagram(d: Diagram) -> ValidationReport:
    """Check every map inside ``d``, recursively, and localise the first failure."""
    return _report(_validate_diagram, d)


def validate_map(f: DiagramMap) -> ValidationReport:
    return _report(_validate_map, f)


_validated: weakref.WeakSet = weakref.WeakSet()


def _reraise(e: ValidationError, prefix):
    raise ValidationError(e.message, list(prefix) + list(e.path)) from None


def _validate_diagram(d, prefix):
    if d in _validated or isinstance(d, Diagram0):
        return
    for name, items in (("regular", d.regulars), ("singular", d.singulars)):
        for i, x in enumerate(items):
            _validate_diagram(x, prefix + (f"{name} {i}",))
    for name, items in (("forward", d.forward), ("backward", d.backward)):
        for i, x in enumerate(items):
            _validate_map(x, prefix + (f"{name} {i}",))
    _validated.add(d)


def _validate_map(f, prefix):
    if f in _validated or isinstance(f, Map0):
        return
    _validate_diagram(f.source, prefix + ("source",))
    _validate_diagram(f.target, prefix + ("target",))
    for name, items in (("regular slice", f.regular_slices), ("singular slice", f.singular_slices)):
        for i, x in enumerate(items):
            _validate_map(x, prefix + (f"{name} {i}",))
    try:
        _check_commutation(f)
    except ValidationError as e:
        _reraise(e, prefix)
    _validated.add(f)


# -- operations -----------------------------------------------------------------


@lru_cache(maxsize=1 << 14)
def identity_map(d: Diagram) -> DiagramMap:
    if isinstance(d, Diagram0):
        return Map0(d, d)
    return MapN(
        d, d, ordmaps.identity(d.length),
        [identity_map(r) for r in d.regulars],
        [identity_map(s) for s in d.singulars],
    )


@lru_cache(maxsize=1 << 16)
def compose_maps(f: DiagramMap, g: DiagramMap) -> DiagramMap:
    """First ``f: X -> Y``, then ``g: Y -> W``."""
    if f.target is not g.source:
        raise CompositionError(f"target of {f!r} is not the source of {g!r}")
    if isinstance(f, Map0):
        return Map0(f.source, g.target)
    if f.source is f.target and f is identity_map(f.source):
        return g
    if g.source is g.target and g is identity_map(g.source):
        return f
    fs = f.singular
    greg = g.regular
    return MapN(
        f.source, g.target,
        ordmaps.compose(fs, g.singular),
        [compose_maps(f.regular_slices[greg(i)], s) for i, s in enumerate(g.regular_slices)],
        [compose_maps(s, g.singular_slices[fs(j)]) for j, s in enumerate(f.singular_slices)],
    )


def compose_all(maps: Sequence[DiagramMap]) -> DiagramMap:
    out = maps[0]
    for m in maps[1:]:
        out = compose_maps(out, m)
    return out


def is_identity(f: DiagramMap) -> bool:
    return f.source is f.target and f is identity_map(f.source)


def is_isomorphism(f: DiagramMap) -> bool:
    """In a skeletal setting the isomorphisms are exactly the identities."""
    return is_identity(f)


def pi(f: MapN) -> Monotone:
    """The shape of ``f`` at the top level: its singular monotone."""
    return f.singular


POINT = Generator("pt", 0)


@lru_cache(maxsize=1 << 14)
def project_shape(x):
    """Forget every label, sending a diagram or map to its pure shape."""
    if isinstance(x, Diagram0):
        return Diagram0(POINT)
    if isinstance(x, Map0):
        return Map0(Diagram0(POINT), Diagram0(POINT))
    if isinstance(x, DiagramN):
        return DiagramN(
            [project_shape(r) for r in x.regulars], [project_shape(s) for s in x.singulars],
            [project_shape(m) for m in x.forward], [project_shape(m) for m in x.backward],
        )
    return MapN(
        project_shape(x.source), project_shape(x.target), x.singular,
        [project_shape(s) for s in x.regular_slices], [project_shape(s) for s in x.singular_slices],
    )


def generators_of(x) -> set[Generator]:
    """Every generator label occurring anywhere in a diagram or map."""
    out: set[Generator] = set()
    seen = set()

    def walk(y):
        if y in seen:
            return
        seen.add(y)
        if isinstance(y, Diagram0):
            out.add(y.generator)
        elif isinstance(y, Map0):
            walk(y.source)
            walk(y.target)
        elif isinstance(y, DiagramN):
            for z in y.regulars + y.singulars:
                walk(z)
            for z in y.forward + y.backward:
                walk(z)
        else:
            walk(y.source)
            walk(y.target)
    walk(x)
    return out


def lift(d: Diagram, dimension: int) -> Diagram:
    """Wrap ``d`` in length-0 zigzags until it reaches ``dimension``."""
    if dimension < d.dimension:
        raise DimensionMismatchError(f"cannot lower a {d.dimension}-diagram to dimension {dimension}")
    while d.dimension < dimension:
        d = d.identity()
    return d


def thin_map(source: DiagramN, target: DiagramN, values: Sequence[int]) -> MapN:
    """A 1-map, whose 0-dimensional slices are forced by thinness."""
    if source.dimension != 1:
        raise DimensionMismatchError("thin_map builds maps of 1-diagrams")
    mono = Monotone(tuple(values), target.length)
    reg = ordmaps.wraith_dual(mono)
    return MapN(
        source, target, mono,
        [Map0(source.regulars[reg(i)], t) for i, t in enumerate(target.regulars)],
        [Map0(s, target.singulars[mono(j)]) for j, s in enumerate(source.singulars)],
    )


@dataclass(frozen=True)
class Sink:
    """A family of maps sharing a common target."""
    target: Diagram
    legs: tuple[DiagramMap, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(self.legs))
        for i, leg in enumerate(self.legs):
            if leg.target is not self.target:
                raise ValidationError("leg does not land in the sink target", [f"leg {i}"])
