"""Brute-force reference for degeneracies and normal forms.

Everything here is computed by exhaustive search over the finitely many maps
between small diagrams.  Only the plain zigzag data structures are shared
with the fast algorithms, so the two can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .core import (
    Diagram, Diagram0, DiagramMap, DiagramN, Map0, MapN, compose_maps, generator_leq, generators_of,
    identity_map,
)
from .errors import BudgetExceeded
from .ordmaps import Monotone, compose, enumerate_monotones, identity, wraith_dual


@dataclass(frozen=True)
class Budget:
    max_dimension: int = 3
    max_length: int = 3
    max_generators: int = 4
    max_candidates: int = 20000

    def check(self, d: Diagram):
        if d.dimension > self.max_dimension:
            raise BudgetExceeded(f"dimension {d.dimension} exceeds {self.max_dimension}")
        longest = _longest(d)
        if longest > self.max_length:
            raise BudgetExceeded(f"a level has length {longest}, limit {self.max_length}")
        count = len(generators_of(d))
        if count > self.max_generators:
            raise BudgetExceeded(f"{count} generators, limit {self.max_generators}")


DEFAULT_BUDGET = Budget()


@lru_cache(maxsize=None)
def _longest(d: Diagram) -> int:
    if isinstance(d, Diagram0):
        return 0
    return max([d.length] + [_longest(x) for x in d.regulars + d.singulars])


# -- exhaustive map search --------------------------------------------------------


def maps_between(X: Diagram, Y: Diagram) -> tuple[DiagramMap, ...]:
    """Every map ``X -> Y``."""
    return _search(X, Y, None, None)


def lifts(h: DiagramMap, e: DiagramMap) -> tuple[DiagramMap, ...]:
    """Every ``u`` with ``u ; e == h``."""
    return _search(h.source, e.source, e, h)


@lru_cache(maxsize=None)
def _search(X, Y, e, h) -> tuple[DiagramMap, ...]:
    if X.dimension != Y.dimension:
        return ()
    if isinstance(X, Diagram0):
        if not generator_leq(X.generator, Y.generator):
            return ()
        u = Map0(X, Y)
        return (u,) if e is None or compose_maps(u, e) is h else ()
    out = []
    for mono in enumerate_monotones(X.length, Y.length):
        if e is not None and compose(mono, e.singular) != h.singular:
            continue
        out.extend(_maps_over(X, Y, mono, e, h))
    return tuple(out)


def _maps_over(X, Y, mono, e, h) -> Iterator[DiagramMap]:
    reg = wraith_dual(mono)
    m = Y.length

    def reg_options(i):
        if e is None:
            return _search(X.regulars[reg(i)], Y.regulars[i], None, None)
        j = e.regular.values.index(i)
        if h.regular_slices[j].source is not X.regulars[reg(i)]:
            return ()
        return _search(X.regulars[reg(i)], Y.regulars[i], e.regular_slices[j], h.regular_slices[j])

    def sing_options(j):
        t = mono(j)
        if e is None:
            return _search(X.singulars[j], Y.singulars[t], None, None)
        return _search(X.singulars[j], Y.singulars[t], e.singular_slices[t], h.singular_slices[j])

    rs: list = [None] * (m + 1)
    ss: list = [None] * X.length

    def squares_ok(i, p, q):
        if p < q:
            if compose_maps(rs[i], Y.forward[i]) is not compose_maps(X.forward[p], ss[p]):
                return False
            return compose_maps(rs[i + 1], Y.backward[i]) is compose_maps(X.backward[q - 1], ss[q - 1])
        return compose_maps(rs[i], Y.forward[i]) is compose_maps(rs[i + 1], Y.backward[i])

    def fill_singular(i, j, q):
        # choose singular slices j..q-1, checking triangles as we go
        if j == q:
            yield
            return
        for s in sing_options(j):
            if j > _start[i] and compose_maps(X.backward[j - 1], ss[j - 1]) is not compose_maps(X.forward[j], s):
                continue
            ss[j] = s
            yield from fill_singular(i, j + 1, q)
        ss[j] = None

    _start = {}

    def step(i):
        if i == m:
            yield MapN(X, Y, mono, rs, ss)
            return
        p, q = _interval(mono, i)
        _start[i] = p
        for _ in fill_singular(i, p, q):
            for r in reg_options(i + 1):
                rs[i + 1] = r
                if squares_ok(i, p, q):
                    yield from step(i + 1)
            rs[i + 1] = None

    for r0 in reg_options(0):
        rs[0] = r0
        for u in step(0):
            if e is None or compose_maps(u, e) is h:
                yield u


def _interval(mono: Monotone, i: int) -> tuple[int, int]:
    vals = mono.values
    p = sum(1 for v in vals if v < i)
    q = sum(1 for v in vals if v <= i)
    return p, q


# -- degeneracies by enumeration --------------------------------------------------


def enumerate_degeneracies(T: Diagram, budget: Optional[Budget] = DEFAULT_BUDGET,
                           through: Sequence[DiagramMap] = ()) -> tuple[DiagramMap, ...]:
    """Every degeneracy into ``T``, one per subobject.

    With ``through`` given, only those degeneracies every listed map factors
    through are returned; the search discards slice candidates early.
    """
    limit = None
    if budget is not None:
        budget.check(T)
        limit = budget.max_candidates
    return _degeneracies(T, tuple(through), limit)


@lru_cache(maxsize=None)
def _degeneracies(T: Diagram, through: tuple[DiagramMap, ...], limit: Optional[int]) -> tuple[DiagramMap, ...]:
    if isinstance(T, Diagram0):
        return (identity_map(T),)
    found: dict[DiagramMap, None] = {}
    count = 0
    for par in _parallel_degeneracies(T, through, limit):
        P = par.source
        flat = [h for h in range(P.length)
                if P.forward[h] is identity_map(P.regulars[h]) and P.backward[h] is identity_map(P.regulars[h + 1])]
        for k in range(len(flat) + 1):
            for drop in combinations(flat, k):
                count += 1
                if limit is not None and count > limit:
                    raise BudgetExceeded(f"more than {limit} candidate degeneracies")
                d = compose_maps(_squeeze(P, drop), par) if drop else par
                if all(lifts(f, d) for f in through):
                    found[d] = None
    return tuple(found)


def _parallel_degeneracies(T: DiagramN, through, limit) -> Iterator[MapN]:
    cand_r = [_degeneracies(r, tuple(f.regular_slices[h] for f in through), limit)
              for h, r in enumerate(T.regulars)]
    cand_s = [_degeneracies(s, tuple(f.singular_slices[j] for f in through
                                     for j, t in enumerate(f.singular.values) if t == h), limit)
              for h, s in enumerate(T.singulars)]
    m = T.length
    dr: list = [None] * (m + 1)
    ds: list = [None] * m
    fwd: list = [None] * m
    bwd: list = [None] * m

    def step(h):
        if h == m:
            P = DiagramN([d.source for d in dr], [d.source for d in ds], fwd, bwd)
            yield MapN(P, T, identity(m), dr, ds)
            return
        for s in cand_s[h]:
            ds[h] = s
            for lf in lifts(compose_maps(dr[h], T.forward[h]), s):
                fwd[h] = lf
                for r in cand_r[h + 1]:
                    dr[h + 1] = r
                    for lb in lifts(compose_maps(r, T.backward[h]), s):
                        bwd[h] = lb
                        yield from step(h + 1)

    for r0 in cand_r[0]:
        dr[0] = r0
        yield from step(0)


def _squeeze(P: DiagramN, drop: Sequence[int]) -> MapN:
    """The map from ``P`` minus the identity cospans at ``drop`` back into ``P``."""
    keep = [h for h in range(P.length) if h not in set(drop)]
    small = DiagramN(
        [P.regulars[0]] + [P.regulars[h + 1] for h in keep],
        [P.singulars[h] for h in keep],
        [P.forward[h] for h in keep],
        [P.backward[h] for h in keep],
    )
    return MapN(small, P, Monotone(tuple(keep), P.length),
                [identity_map(r) for r in P.regulars],
                [identity_map(s) for s in small.singulars])


def below(d: DiagramMap, e: DiagramMap) -> bool:
    """Subobject order: ``d`` factors through ``e``."""
    return bool(lifts(d, e))


@dataclass(frozen=True, eq=False)
class OracleResult:
    normal_form: Diagram
    normaliser: DiagramMap
    factorisations: tuple[DiagramMap, ...]
    candidates: int


def _least(elements: Sequence[DiagramMap]) -> DiagramMap:
    cur = elements[0]
    for e in elements[1:]:
        if below(e, cur):
            cur = e
    if not all(below(cur, e) for e in elements):
        raise ArithmeticError("no least element")
    return cur


def oracle_normalise(target: Diagram, legs: Sequence[DiagramMap] = (),
                     budget: Optional[Budget] = DEFAULT_BUDGET) -> OracleResult:
    """The least degeneracy into ``target`` through which every leg factors."""
    admissible = enumerate_degeneracies(target, budget, legs)
    d = _least(admissible)
    facts = []
    for leg in legs:
        found = lifts(leg, d)
        if len(found) != 1:
            raise ArithmeticError(f"expected a unique factorisation, found {len(found)}")
        facts.append(found[0])
    return OracleResult(d.source, d, tuple(facts), len(admissible))


def oracle_meet(f: DiagramMap, g: DiagramMap, budget: Optional[Budget] = DEFAULT_BUDGET) -> DiagramMap:
    """The greatest degeneracy below both ``f`` and ``g``."""
    lower = [d for d in enumerate_degeneracies(f.target, budget) if below(d, f) and below(d, g)]
    top = lower[0]
    for d in lower[1:]:
        if below(top, d):
            top = d
    if not all(below(d, top) for d in lower):
        raise ArithmeticError("no greatest lower bound")
    return top


def clear_caches():
    for fn in (_search, _degeneracies, _longest):
        fn.cache_clear()
