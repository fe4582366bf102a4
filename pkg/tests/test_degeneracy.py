import itertools

import pytest

from zignorm import fixtures
from zignorm.core import (
    Diagram0, DiagramN, Generator, compose_maps, identity_map, is_identity, thin_map, validate_map,
)
from zignorm.degeneracy import (
    delete_identity_cospans, factor_simple_parallel, factor_through, insert_identity_cospans, is_degeneracy, pullback,
)
from zignorm.errors import BudgetExceeded, ValidationError
from zignorm.fixtures import POINT, _word
from zignorm.normalisation import normalise, normalise_relative
from zignorm.oracle import Budget, enumerate_degeneracies, lifts, maps_between, oracle_meet
from zignorm.ordmaps import Monotone, compose, face, identity

SMALL = Budget(max_candidates=400)


def word(labels):
    return _word(Diagram0(POINT), labels)


a = Generator("a", 1)


def test_insert_after_a_cell_gives_unit_removal_fixture():
    fx = fixtures.unit_removal()
    ins = insert_identity_cospans(fx.expected, face(1, 1))
    assert ins.target is fx.diagram
    assert is_degeneracy(ins) is not None


def test_insert_nothing_is_identity():
    d = word([a, a])
    assert insert_identity_cospans(d, identity(2)) is identity_map(d)


def test_double_insertion_is_composite_of_single_ones():
    d = word([a, a])
    once = insert_identity_cospans(d, face(0, 2))
    twice = insert_identity_cospans(once.target, face(3, 3))
    both = insert_identity_cospans(d, compose(face(0, 2), face(3, 3)))
    assert compose_maps(once, twice) is both


def test_insert_rejects_non_injective_positions():
    with pytest.raises(ValueError):
        insert_identity_cospans(word([a, a]), Monotone((0, 0), 1))


def test_delete_identity_cospans_inverts_insertion():
    d = word([a])
    ins = insert_identity_cospans(d, Monotone((1,), 3))
    assert delete_identity_cospans(ins.target, [0, 2]) is ins
    with pytest.raises(ValidationError):
        delete_identity_cospans(ins.target, [1])


def test_identity_and_insertions_are_degeneracies():
    d = fixtures.eckmann_hilton().diagram
    assert is_degeneracy(identity_map(d)) is not None
    for pos in ([0], [1]):
        assert is_degeneracy(insert_identity_cospans(d, Monotone(tuple(pos), 2))) is not None


def test_raising_a_slice_is_not_a_degeneracy():
    pt = Diagram0(fixtures.POINT)
    flat = DiagramN.from_cospans(pt, [(identity_map(pt), identity_map(pt))])
    raised = thin_map(flat, word([a]), [0])
    assert raised.singular.is_injective()
    assert is_degeneracy(raised) is None


def test_collapsing_two_levels_is_not_a_degeneracy():
    q = fixtures.essential_identity().q
    assert is_degeneracy(q) is None


def test_factor_of_parallel_has_identity_simple_part():
    fx = fixtures.collapse_walkthrough()
    par = normalise_relative(fx.T, [fx.leg]).parallel
    simple, parallel = factor_simple_parallel(is_degeneracy(par))
    assert is_identity(simple) and parallel is par


def test_factor_of_insertion_has_identity_parallel_part():
    ins = insert_identity_cospans(word([a]), Monotone((1,), 2))
    simple, parallel = factor_simple_parallel(is_degeneracy(ins))
    assert simple is ins and is_identity(parallel)


def test_factor_recovers_both_parts_of_a_composite(small_corpus):
    checked = 0
    for sink in small_corpus:
        T = sink.target
        if T.dimension < 2:
            continue
        try:
            degs = enumerate_degeneracies(T, SMALL)
        except BudgetExceeded:
            continue
        for d in degs:
            w = is_degeneracy(d)
            if not d.singular.is_identity():
                continue
            # d is parallel: put an insertion in front and factor again
            ins = insert_identity_cospans(d.source, Monotone(tuple(range(d.source.length)), d.source.length + 1))
            extended = DiagramN.from_cospans(T.regulars[0], list(zip(T.forward, T.backward)) +
                                             [(identity_map(T.target), identity_map(T.target))])
            # the parallel part over the extended target carries d plus an identity level
            par = type(d)(ins.target, extended, identity(T.length + 1),
                          list(d.regular_slices) + [d.regular_slices[-1]],
                          list(d.singular_slices) + [d.regular_slices[-1]])
            composite = compose_maps(ins, par)
            simple, parallel = factor_simple_parallel(is_degeneracy(composite))
            assert simple is ins and parallel is par
            assert w is not None
            checked += 1
    assert checked > 20


def test_pullback_along_itself():
    fx = fixtures.collapse_walkthrough()
    f = normalise(fx.T).normaliser
    P, p, q = pullback(f, f)
    assert P is f.source and is_identity(p) and is_identity(q)


def test_pullback_of_two_insertions():
    base = word([a])
    T = insert_identity_cospans(base, Monotone((0,), 3)).target
    f = delete_identity_cospans(T, [1])
    g = delete_identity_cospans(T, [2])
    P, p, q = pullback(f, g)
    assert P is base
    assert p.singular == Monotone((0,), 2) and q.singular == Monotone((0,), 2)
    assert compose_maps(p, f) is oracle_meet(f, g)


def test_pullback_with_identity():
    fx = fixtures.collapse_walkthrough()
    g = normalise(fx.T).normaliser
    P, p, q = pullback(identity_map(fx.T), g)
    assert P is g.source and p is g and is_identity(q)


def test_factor_through_matches_brute_force(small_corpus):
    for sink in small_corpus[:60]:
        try:
            degs = enumerate_degeneracies(sink.target, SMALL)
        except BudgetExceeded:
            continue
        for e in degs[:8]:
            for h in sink.legs + degs[:8]:
                found = lifts(h, e)
                assert len(found) <= 1
                assert factor_through(h, e) is (found[0] if found else None)


def test_degeneracies_recognised_and_others_rejected(small_corpus):
    for sink in small_corpus[:80]:
        T = sink.target
        try:
            degs = set(enumerate_degeneracies(T, SMALL))
        except BudgetExceeded:
            continue
        if T.dimension > 2:
            continue
        for r in T.regulars:
            for f in maps_between(r.identity() if r.dimension + 1 == T.dimension else r, T)[:30]:
                assert (is_degeneracy(f) is not None) == (f in degs)


def test_degeneracies_closed_under_composition(small_corpus):
    count = 0
    for sink in small_corpus:
        try:
            degs = enumerate_degeneracies(sink.target, SMALL)
        except BudgetExceeded:
            continue
        for d in degs[:10]:
            for e in enumerate_degeneracies(d.source, SMALL)[:10]:
                c = compose_maps(e, d)
                assert is_degeneracy(c) is not None and validate_map(c)
                count += 1
    assert count > 100


def test_pullbacks_are_meets(small_corpus):
    pairs = 0
    for sink in small_corpus:
        try:
            degs = enumerate_degeneracies(sink.target, SMALL)
        except BudgetExceeded:
            continue
        for f, g in itertools.islice(itertools.combinations(degs, 2), 15):
            P, p, q = pullback(f, g)
            assert is_degeneracy(p) is not None and is_degeneracy(q) is not None
            assert compose_maps(p, f) is compose_maps(q, g)
            assert compose_maps(p, f) is oracle_meet(f, g, SMALL)
            pairs += 1
    assert pairs > 200
