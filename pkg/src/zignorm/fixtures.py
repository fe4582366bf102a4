"""Hand-built diagrams used by the tests, the demos and the command line.

* ``unit_removal``: a 1-cell followed by a redundant identity level.
* ``essential_identity``: an identity level that a sink forces us to keep.
* ``collapse_walkthrough``: normalising slices turns two levels into
  identities; only the one no leg hits gets dropped.
* ``planar_diagram``: a 2-dimensional string diagram with ten singular points.
* ``eckmann_hilton``: two 2-cells on the identity of a point trading places.
* ``syllepsis``: the 5-dimensional comparison of the two ways of doing that
  one level up.
"""

from __future__ import annotations

from types import SimpleNamespace

from .core import (
    Diagram, Diagram0, DiagramN, Generator, Map0, MapN, identity_map, thin_map,
)
from .typechecker import Signature

POINT = Generator("*", 0)


def _word(point: Diagram0, labels) -> DiagramN:
    """The 1-diagram with the given singular labels between copies of ``point``."""
    cospans = []
    for g in labels:
        s = Diagram0(g)
        cospans.append((Map0(point, s), Map0(point, s)))
    return DiagramN.from_cospans(point, cospans)


def unit_removal():
    """``* -f-> * -id-> *`` whose normal form is the single cell."""
    pt = Diagram0(POINT)
    f = Generator("f", 1)
    d = DiagramN.from_cospans(pt, [(Map0(pt, Diagram0(f)), Map0(pt, Diagram0(f))),
                                   (identity_map(pt), identity_map(pt))])
    return SimpleNamespace(diagram=d, expected=_word(pt, [f]), generator=f)


def essential_identity():
    """An identity cospan ``M`` that a sink ``{p, q}`` keeps alive.

    ``T = X -> F <- X -> F <- X`` is normal.  ``q: T -> M`` squashes both
    levels of ``T`` into the single identity level of ``M``, and
    ``p: B -> M`` includes the length-0 diagram on ``X``.
    """
    pt = Diagram0(POINT)
    a = Generator("a", 1)
    X = _word(pt, [a])
    F = _word(pt, [a, a])
    into_first, into_second = thin_map(X, F, [0]), thin_map(X, F, [1])
    squash = thin_map(F, X, [0, 0])
    T = DiagramN.from_cospans(X, [(into_first, into_second), (into_first, into_second)])
    idX = identity_map(X)
    M = DiagramN.from_cospans(X, [(idX, idX)])
    B = X.identity()
    q = MapN(T, M, [0, 0], [idX, idX], [squash, squash])
    p = MapN(B, M, [], [idX, idX], [])
    return SimpleNamespace(T=T, M=M, B=B, p=p, q=q, X=X, F=F)


def collapse_walkthrough():
    """A length-3 target whose levels 1 and 2 become identities after slicing.

    The single leg hits level 2 but not level 1, so the normal form has
    length 2 and the normaliser misses exactly height 1.
    """
    pt = Diagram0(POINT)
    a, m = Generator("a", 1), Generator("m", 2)
    W = _word(pt, [a])
    Wm = _word(pt, [m])
    W2 = DiagramN.from_cospans(pt, [(Map0(pt, Diagram0(a)), Map0(pt, Diagram0(a))),
                                    (identity_map(pt), identity_map(pt))])
    to_m = thin_map(W, Wm, [0])
    pad = thin_map(W, W2, [0])
    idW = identity_map(W)
    T = DiagramN.from_cospans(W, [(to_m, to_m), (pad, pad), (pad, pad)])
    A = DiagramN.from_cospans(W, [(to_m, to_m), (to_m, to_m), (idW, idW)])
    leg = MapN(A, T, [0, 0, 2], [idW, idW, idW, idW], [identity_map(Wm), identity_map(Wm), pad])
    N = DiagramN.from_cospans(W, [(to_m, to_m), (idW, idW)])
    return SimpleNamespace(T=T, A=A, leg=leg, expected=N, removed=1, kept=2)


def planar_diagram():
    """A 2-diagram with wires ``a..g`` and 2-cells ``alpha, beta, gamma, delta``.

    Reading upwards: ``alpha`` splits ``b`` into ``d e`` while ``gamma`` turns
    ``c`` into ``f``; then ``beta`` merges ``a d`` into ``g``; finally the
    scalar ``delta`` appears between ``e`` and ``f``.
    """
    pt = Diagram0(POINT)
    w = {n: Generator(n, 1) for n in "abcdefg"}
    alpha, beta, gamma, delta = (Generator(n, 2) for n in ("alpha", "beta", "gamma", "delta"))

    def word(*labels):
        return _word(pt, [w[x] if isinstance(x, str) else x for x in labels])

    r0, s0 = word("a", "b", "c"), word("a", alpha, gamma)
    r1, s1 = word("a", "d", "e", "f"), word(beta, "e", "f")
    r2, s2 = word("g", "e", "f"), word("g", "e", delta, "f")
    r3 = word("g", "e", "f")
    d = DiagramN(
        [r0, r1, r2, r3], [s0, s1, s2],
        [thin_map(r0, s0, [0, 1, 2]), thin_map(r1, s1, [0, 0, 1, 2]), thin_map(r2, s2, [0, 1, 3])],
        [thin_map(r1, s0, [0, 1, 1, 2]), thin_map(r2, s1, [0, 1, 2]), thin_map(r3, s2, [0, 1, 3])],
    )

    def cell(g, below, above):
        mid = _word(pt, [g])
        return DiagramN.from_cospans(below, [(thin_map(below, mid, [0] * below.length),
                                              thin_map(above, mid, [0] * above.length))])

    empty = pt.identity()
    entries = [(POINT, pt)] + [(g, _word(pt, [g])) for g in w.values()] + [
        (alpha, cell(alpha, word("b"), word("d", "e"))),
        (beta, cell(beta, word("a", "d"), word("g"))),
        (gamma, cell(gamma, word("c"), word("f"))),
        (delta, cell(delta, empty, empty)),
    ]
    return SimpleNamespace(diagram=d, signature=Signature(entries), content_count=10)


def _planar_cell(pt, E, g):
    """``E -> [* g *] <- E``: a cell on the identity of the identity of a point."""
    word = _word(pt, [g])
    inc = thin_map(E, word, [])
    return DiagramN.from_cospans(E, [(inc, inc)]), word


def eckmann_hilton():
    """Two 2-cells ``x, y`` on ``id(*)`` swapping vertical order through a level
    where they sit side by side."""
    pt = Diagram0(POINT)
    x, y = Generator("x", 2), Generator("y", 2)
    E = pt.identity()
    Mx, X1 = _planar_cell(pt, E, x)
    My, Y1 = _planar_cell(pt, E, y)
    idE = identity_map(E)
    XY1 = _word(pt, [x, y])
    A = DiagramN.from_cospans(E, [Mx.cospan(0), My.cospan(0)])
    C = DiagramN.from_cospans(E, [My.cospan(0), Mx.cospan(0)])
    inc = thin_map(E, XY1, [])
    B = DiagramN.from_cospans(E, [(inc, inc)])
    x_in, y_in = thin_map(X1, XY1, [0]), thin_map(Y1, XY1, [1])
    left = MapN(A, B, [0, 0], [idE, idE], [x_in, y_in])
    right = MapN(C, B, [0, 0], [idE, idE], [y_in, x_in])
    d = DiagramN.from_cospans(A, [(left, right)])
    sig = Signature([(POINT, pt), (x, Mx), (y, My)])
    return SimpleNamespace(diagram=d, signature=sig, x=x, y=y, typing={x: Mx, y: My},
                           before=A, middle=B, after=C)


def syllepsis():
    """3-cells ``x, y`` on ``id(id(*))`` and the 5-diagram relating the two
    ways of moving one past the other."""
    pt = Diagram0(POINT)
    x, y = Generator("x", 3), Generator("y", 3)
    E = pt.identity()
    L = E.identity()
    idE, idL = identity_map(E), identity_map(L)
    Mx, X1 = _planar_cell(pt, E, x)
    My, Y1 = _planar_cell(pt, E, y)
    XY1 = _word(pt, [x, y])

    def from_L(D):
        return MapN(L, D, [], [idE] * (D.length + 1), [])

    def cell3(M):
        inc = from_L(M)
        return DiagramN.from_cospans(L, [(inc, inc)])

    X3, Y3 = cell3(Mx), cell3(My)

    def at(M, D, h):
        # include the single-level M into D at height h
        return MapN(M, D, [h], [idE] * (D.length + 1), [identity_map(M.singulars[0])])

    inc = thin_map(E, XY1, [])
    H2 = DiagramN.from_cospans(E, [(inc, inc)])
    D1 = DiagramN.from_cospans(E, [Mx.cospan(0), My.cospan(0)])
    D3 = DiagramN.from_cospans(E, [My.cospan(0), Mx.cospan(0)])
    x_in, y_in = thin_map(X1, XY1, [0]), thin_map(Y1, XY1, [1])
    x_H = MapN(Mx, H2, [0], [idE, idE], [x_in])
    y_H = MapN(My, H2, [0], [idE, idE], [y_in])

    XY3 = DiagramN.from_cospans(L, [X3.cospan(0), Y3.cospan(0)])
    YX3 = DiagramN.from_cospans(L, [Y3.cospan(0), X3.cospan(0)])

    def level(D):
        inc = from_L(D)
        return DiagramN.from_cospans(L, [(inc, inc)])

    B1, BH, B3 = level(D1), level(H2), level(D3)

    def squash(src, tgt, slices):
        return MapN(src, tgt, [0, 0], [idL, idL], slices)

    col1 = DiagramN.from_cospans(XY3, [(squash(XY3, B1, [at(Mx, D1, 0), at(My, D1, 1)]),
                                        squash(YX3, B1, [at(My, D1, 1), at(Mx, D1, 0)]))])
    col2 = DiagramN.from_cospans(XY3, [(squash(XY3, BH, [x_H, y_H]), squash(YX3, BH, [y_H, x_H]))])
    col3 = DiagramN.from_cospans(XY3, [(squash(XY3, B3, [at(Mx, D3, 1), at(My, D3, 0)]),
                                        squash(YX3, B3, [at(My, D3, 0), at(Mx, D3, 1)]))])

    def slide(src_level, D, slices):
        inner = MapN(D, H2, [0, 0], [idE, idE], slices)
        return MapN(src_level, BH, [0], [idL, idL], [inner])

    one_to_two = MapN(col1, col2, [0], [identity_map(XY3), identity_map(YX3)],
                      [slide(B1, D1, [x_in, y_in])])
    three_to_two = MapN(col3, col2, [0], [identity_map(XY3), identity_map(YX3)],
                        [slide(B3, D3, [y_in, x_in])])
    d = DiagramN.from_cospans(col1, [(one_to_two, three_to_two)])
    sig = Signature([(POINT, pt), (x, X3), (y, Y3)])
    return SimpleNamespace(diagram=d, signature=sig, x=x, y=y, typing={x: X3, y: Y3},
                           columns=(col1, col2, col3))
