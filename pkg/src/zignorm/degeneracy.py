"""Degeneracy maps: insertions of identity cospans followed by degenerate slices.

Every degeneracy ``d`` factors uniquely as ``simple`` then ``parallel``:

* ``simple`` inserts identity cospans at the heights missed by ``pi(d)``;
* ``parallel`` keeps the shape and has a degeneracy in every slice.

At dimension 0 a degeneracy is an identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import ordmaps
from .core import (
    Diagram, DiagramMap, DiagramN, Map0, MapN, _check_commutation, compose_maps, identity_map,
    is_identity,
)
from .errors import ValidationError
from .ordmaps import Monotone


@dataclass(frozen=True, eq=False)
class DegeneracyWitness:
    """Proof that ``map`` is a degeneracy, with its simple/parallel factors.

    ``slices`` holds the witnesses for the regular slices and then the
    singular slices of ``parallel``.  All of these are ``None`` at dimension 0.
    """
    map: DiagramMap
    simple: Optional[MapN] = None
    parallel: Optional[MapN] = None
    slices: tuple["DegeneracyWitness", ...] = ()


def insert_identity_cospans(source: DiagramN, positions: Monotone) -> MapN:
    """The simple degeneracy that puts identity cospans at heights missing from ``positions``.

    ``positions`` is an injective monotone ``[len source] -> [m]``; the result
    maps ``source`` into a new diagram of length ``m``.
    """
    if not positions.is_injective():
        raise ValueError(f"{positions} is not injective")
    if positions.source_size != source.length:
        raise ValueError(f"{positions} does not start at [{source.length}]")
    reg = ordmaps.wraith_dual(positions)
    hit = {h: j for j, h in enumerate(positions.values)}
    regulars, singulars, forward, backward = [], [], [], []
    for h in range(positions.target_size + 1):
        regulars.append(source.regulars[reg(h)])
    for h in range(positions.target_size):
        if h in hit:
            j = hit[h]
            singulars.append(source.singulars[j])
            forward.append(source.forward[j])
            backward.append(source.backward[j])
        else:
            r = regulars[h]
            singulars.append(r)
            forward.append(identity_map(r))
            backward.append(identity_map(r))
    target = DiagramN(regulars, singulars, forward, backward)
    return MapN(
        source, target, positions,
        [identity_map(r) for r in regulars],
        [identity_map(s) for s in source.singulars],
    )


def delete_identity_cospans(d: DiagramN, heights: Sequence[int]) -> MapN:
    """Remove identity cospans at ``heights``; returns the insertion back into ``d``."""
    drop = set(heights)
    for h in drop:
        fwd, bwd = d.cospan(h)
        if not (is_identity(fwd) and is_identity(bwd)):
            raise ValidationError("cospan is not an identity", [f"height {h}"])
    kept = [h for h in range(d.length) if h not in drop]
    regulars = [d.regulars[0]] + [d.regulars[h + 1] for h in kept]
    smaller = DiagramN(regulars, [d.singulars[h] for h in kept],
                       [d.forward[h] for h in kept], [d.backward[h] for h in kept])
    ins = insert_identity_cospans(smaller, Monotone(tuple(kept), d.length))
    assert ins.target is d
    return ins


def simple_part(f: MapN) -> MapN:
    return insert_identity_cospans(f.source, f.singular)


@lru_cache(maxsize=1 << 15)
def is_degeneracy(f: DiagramMap) -> Optional[DegeneracyWitness]:
    """Return a witness if ``f`` is a degeneracy, otherwise ``None``."""
    if isinstance(f, Map0):
        return DegeneracyWitness(f) if f.source is f.target else None
    if not f.singular.is_injective():
        return None
    simple = simple_part(f)
    parallel = _parallel_residue(f, simple)
    if parallel is None:
        return None
    slices = []
    for s in parallel.regular_slices + parallel.singular_slices:
        w = is_degeneracy(s)
        if w is None:
            return None
        slices.append(w)
    return DegeneracyWitness(f, simple, parallel, tuple(slices))


def _parallel_residue(f: MapN, simple: MapN) -> Optional[MapN]:
    """The unique shape-preserving ``p`` with ``simple ; p == f``, if it exists."""
    T = f.target
    mid = simple.target
    hit = {h: j for j, h in enumerate(f.singular.values)}
    singular_slices = []
    for h in range(T.length):
        if h in hit:
            singular_slices.append(f.singular_slices[hit[h]])
        else:
            left = compose_maps(f.regular_slices[h], T.forward[h])
            right = compose_maps(f.regular_slices[h + 1], T.backward[h])
            if left is not right:
                return None
            singular_slices.append(left)
    return MapN(mid, T, ordmaps.identity(T.length), f.regular_slices, singular_slices)


def factor_simple_parallel(w: DegeneracyWitness) -> tuple[MapN, MapN]:
    if w.simple is None:
        raise ValueError("0-dimensional degeneracies do not factor")
    return w.simple, w.parallel


@lru_cache(maxsize=1 << 15)
def factor_through(h: DiagramMap, e: DiagramMap) -> Optional[DiagramMap]:
    """The unique ``u`` with ``u ; e == h`` for a degeneracy ``e``, or ``None``.

    Degeneracies are monic, so such a ``u`` is unique whenever it exists.
    """
    if h.target is not e.target:
        raise ValueError("maps do not share a target")
    if isinstance(h, Map0):
        if e.source is not e.target:
            return None
        return Map0(h.source, e.source)
    inv = {t: j for j, t in enumerate(e.singular.values)}
    try:
        values = tuple(inv[t] for t in h.singular.values)
    except KeyError:
        return None
    mono = Monotone(values, e.source.length)
    Z, A = h.source, e.source
    singular_slices = []
    for j, t in enumerate(values):
        u = factor_through(h.singular_slices[j], e.singular_slices[t])
        if u is None:
            return None
        singular_slices.append(u)
    ereg = e.regular
    ureg = ordmaps.wraith_dual(mono)
    regular_slices: list[Optional[DiagramMap]] = [None] * (A.length + 1)
    for i, k in enumerate(ereg.values):
        if regular_slices[k] is not None:
            continue
        u = factor_through(h.regular_slices[i], e.regular_slices[i])
        if u is None or u.source is not Z.regulars[ureg(k)]:
            return None
        regular_slices[k] = u
    if any(s is None for s in regular_slices):
        return None
    try:
        u = MapN(Z, A, mono, regular_slices, singular_slices)
    except ValidationError:
        return None
    try:
        _check_commutation(u)
    except ValidationError:
        return None
    return u if compose_maps(u, e) is h else None


@lru_cache(maxsize=1 << 14)
def pullback(f: DiagramMap, g: DiagramMap) -> tuple[Diagram, DiagramMap, DiagramMap]:
    """Pullback ``(P, p, q)`` of two degeneracies ``f: X -> T`` and ``g: Y -> T``.

    The legs ``p: P -> X`` and ``q: P -> Y`` are degeneracies again and
    ``p ; f == q ; g``.
    """
    if f.target is not g.target:
        raise ValueError("pullback needs a common target")
    wf, wg = is_degeneracy(f), is_degeneracy(g)
    if wf is None or wg is None:
        raise ValueError("pullback is only computed for degeneracies")
    if isinstance(f, Map0):
        return f.source, identity_map(f.source), identity_map(g.source)

    T = f.target
    fS, fP = wf.simple, wf.parallel
    gS, gP = wg.simple, wg.parallel
    Xp, Yp = fP.source, gP.source

    # Pull back the parallel parts slice by slice.
    Qr, ar, br = [], [], []
    for h in range(T.length + 1):
        P_, a, b = pullback(fP.regular_slices[h], gP.regular_slices[h])
        Qr.append(P_); ar.append(a); br.append(b)
    Qs, as_, bs = [], [], []
    for h in range(T.length):
        P_, a, b = pullback(fP.singular_slices[h], gP.singular_slices[h])
        Qs.append(P_); as_.append(a); bs.append(b)
    fwd, bwd = [], []
    for h in range(T.length):
        into = compose_maps(as_[h], fP.singular_slices[h])
        left = compose_maps(compose_maps(ar[h], fP.regular_slices[h]), T.forward[h])
        right = compose_maps(compose_maps(ar[h + 1], fP.regular_slices[h + 1]), T.backward[h])
        lf, rb = factor_through(left, into), factor_through(right, into)
        if lf is None or rb is None:
            raise ArithmeticError("pullback legs failed to lift")
        fwd.append(lf); bwd.append(rb)
    Q = DiagramN(Qr, Qs, fwd, bwd)

    # Collapse every height missed by either map.
    keep = set(f.singular.values) & set(g.singular.values)
    groups: list[tuple[Diagram, dict[int, DiagramMap]]] = []
    L, proj = Qr[0], {0: identity_map(Qr[0])}
    kept = []
    for h in range(T.length):
        if h in keep:
            groups.append((L, proj))
            kept.append(h)
            L, proj = Qr[h + 1], {h + 1: identity_map(Qr[h + 1])}
            continue
        left = compose_maps(proj[h], Q.forward[h])
        L2, p1, p2 = pullback(left, Q.backward[h])
        proj = {u: compose_maps(p1, m) for u, m in proj.items()}
        proj[h + 1] = p2
        L = L2
    groups.append((L, proj))

    P = DiagramN(
        [L for L, _ in groups],
        [Qs[h] for h in kept],
        [compose_maps(groups[c][1][h], Q.forward[h]) for c, h in enumerate(kept)],
        [compose_maps(groups[c + 1][1][h + 1], Q.backward[h]) for c, h in enumerate(kept)],
    )
    return P, _leg(P, groups, kept, f, fS, ar, as_), _leg(P, groups, kept, g, gS, br, bs)


def _leg(P, groups, kept, f, fS, ar, as_):
    """The projection from the pullback onto the source of ``f``."""
    X = f.source
    inv = {t: j for j, t in enumerate(f.singular.values)}
    mono = Monotone(tuple(inv[h] for h in kept), X.length)
    reg = ordmaps.wraith_dual(mono)
    # X regular i lives at T regular height x_i (the i-th hit height, or the top).
    hits = list(f.singular.values) + [f.target.length]
    regular_slices = []
    for i in range(X.length + 1):
        c = reg(i)
        u = hits[i]
        L, proj = groups[c]
        regular_slices.append(compose_maps(proj[u], ar[u]))
    singular_slices = [as_[h] for h in kept]
    return MapN(P, X, mono, regular_slices, singular_slices)
