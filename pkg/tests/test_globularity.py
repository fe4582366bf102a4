import pytest

from zignorm import fixtures
from zignorm.core import Diagram0, DiagramN, Generator, Map0, MapN, identity_map, is_identity
from zignorm.corpus import random_diagram
from zignorm.globularity import is_globular, is_globular_map, is_normalising, is_regularly_normalising
from zignorm.normalisation import normalise, normalise_sink

pt = Diagram0(fixtures.POINT)


def test_point_maps_are_globular():
    a = Diagram0(Generator("a", 1))
    assert is_globular_map(Map0(pt, a))
    assert is_globular_map(identity_map(pt))


def test_eckmann_hilton_cospans_are_globular():
    d = fixtures.eckmann_hilton().diagram
    assert all(is_globular_map(f) for f in d.forward + d.backward)
    assert is_globular(d)


def test_normaliser_with_a_non_identity_regular_slice_is_not_globular():
    fx = fixtures.unit_removal()
    T = fx.diagram.identity()
    d = normalise(T).normaliser
    assert is_normalising(d)
    assert not is_globular_map(d)


@pytest.mark.parametrize("seed", range(20))
def test_low_dimensional_diagrams_are_globular(seed):
    assert is_globular(random_diagram(seed, seed % 2))


def test_planar_diagram_is_globular():
    assert is_globular(fixtures.planar_diagram().diagram)


def test_non_identity_regular_slice_in_a_cospan():
    a = Diagram0(Generator("a", 1))
    X = DiagramN.from_cospans(pt, [(identity_map(pt), identity_map(pt))])
    Y = DiagramN.from_cospans(a, [(identity_map(a), identity_map(a))])
    up = MapN(X, Y, [0], [Map0(pt, a)] * 2, [Map0(pt, a)])
    d = DiagramN.from_cospans(X, [(up, up)])
    assert not is_globular_map(up)
    assert not is_globular(d)


def test_regularly_normalising():
    d = fixtures.planar_diagram().diagram
    assert is_regularly_normalising(identity_map(d))
    T = DiagramN.from_cospans(fixtures.unit_removal().diagram, [])
    assert not is_regularly_normalising(identity_map(T))


def _globular_sinks(corpus):
    return [s for s in corpus
            if is_globular(s.target) and all(is_regularly_normalising(f) for f in s.legs)]


def test_normalisation_preserves_globularity(small_corpus):
    sinks = _globular_sinks(small_corpus)
    assert len(sinks) > 30
    for sink in sinks:
        r = normalise_sink(sink)
        assert is_globular(r.normal_form)
        assert is_regularly_normalising(r.normaliser)
        for g in r.factorisations:
            assert is_globular_map(g)
            assert all(is_identity(s) for s in g.regular_slices)
