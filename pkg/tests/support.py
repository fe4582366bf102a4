"""Shared builders for the tests."""

from zignorm.core import Diagram0, DiagramN, Generator, MapN, identity_map, thin_map
from zignorm.fixtures import POINT, _word

a = Generator("a", 1)


def bad_square_map():
    """A 2-map ``[W =id= W] -> [W -> F <- W]`` whose squares cannot both commute."""
    pt = Diagram0(POINT)
    W, F = _word(pt, [a]), _word(pt, [a, a])
    idW = identity_map(W)
    D = DiagramN.from_cospans(W, [(idW, idW)])
    T = DiagramN.from_cospans(W, [(thin_map(W, F, [0]), thin_map(W, F, [1]))])
    return MapN(D, T, [0], [idW, idW], [thin_map(W, F, [0])])


def bad_square_diagram():
    bad = bad_square_map()
    return DiagramN.from_cospans(bad.source, [(bad, bad)])
