import pytest

from zignorm import fixtures
from zignorm.core import Diagram0, DiagramN, Generator, Map0, MapN, identity_map, is_identity, lift, thin_map
from zignorm.errors import AddressError, GlobularityError, SignatureError
from zignorm.normalisation import normalise
from zignorm.typechecker import Signature, extract_piece, generator_at, singular_content, typecheck

pt = Diagram0(fixtures.POINT)


def test_content_counts():
    assert len(singular_content(fixtures.planar_diagram().diagram)) == 10
    assert singular_content(pt) == [((), fixtures.POINT)]
    eh = fixtures.eckmann_hilton()
    assert singular_content(eh.diagram) == [((0, 0, 0), eh.x), ((0, 0, 1), eh.y)]


def test_content_of_planar_diagram_lists_every_cell_once():
    names = sorted(g.name for _, g in singular_content(fixtures.planar_diagram().diagram))
    assert names == sorted(["a", "alpha", "gamma", "beta", "e", "f", "g", "e", "delta", "f"])


def test_generator_at_and_bad_addresses():
    d = fixtures.eckmann_hilton().diagram
    assert generator_at(d, (0, 0, 1)).name == "y"
    for bad in [(1, 0, 0), (0, 0), (0, 0, 0, 0), (0, 0, 2)]:
        with pytest.raises(AddressError):
            extract_piece(d, bad)


def test_eckmann_hilton_x_piece():
    eh = fixtures.eckmann_hilton()
    piece = extract_piece(eh.diagram, (0, 0, 0))
    assert piece.dimension == 3 and piece.length == 1
    # x below an identity level where y used to be
    below = piece.source
    assert below.length == 2
    assert below.cospan(0) == eh.typing[eh.x].cospan(0)
    assert all(is_identity(f) for f in below.cospan(1))
    assert normalise(piece).normal_form is lift(eh.typing[eh.x], 3)


def test_piece_of_a_typing_diagram_is_itself():
    for g, d in fixtures.eckmann_hilton().signature.entries():
        (address, h), = [(a, h) for a, h in singular_content(d) if h == g]
        assert extract_piece(d, address) is d


def test_two_cells_side_by_side_split_into_single_pieces():
    before = fixtures.eckmann_hilton().before
    content = singular_content(before)
    assert len(content) == 2
    for address, g in content:
        piece = extract_piece(before, address)
        assert [h for _, h in singular_content(piece)] == [g]


@pytest.mark.parametrize("name", ["planar_diagram", "eckmann_hilton", "syllepsis"])
def test_every_piece_has_exactly_one_content_element(name):
    d = getattr(fixtures, name)().diagram
    for address, g in singular_content(d):
        piece = extract_piece(d, address)
        assert [h for _, h in singular_content(piece)] == [g]


@pytest.mark.parametrize("name", ["planar_diagram", "eckmann_hilton", "syllepsis"])
def test_fixtures_type_check(name):
    fx = getattr(fixtures, name)()
    assert typecheck(fx.diagram, fx.signature)


def test_missing_generator_rejects_at_its_address():
    eh = fixtures.eckmann_hilton()
    sig = Signature([(fixtures.POINT, pt), (eh.x, eh.typing[eh.x])])
    verdict = typecheck(eh.diagram, sig)
    assert not verdict
    assert verdict.address == (0, 0, 1) and verdict.generator == eh.y


def test_wrong_typing_rejects():
    eh = fixtures.eckmann_hilton()
    # x declared as a cell between copies of a wire c instead of on the point's identity
    c = Generator("c", 1)
    Wc, Wx = fixtures._word(pt, [c]), fixtures._word(pt, [eh.x])
    cell = DiagramN.from_cospans(Wc, [(thin_map(Wc, Wx, [0]), thin_map(Wc, Wx, [0]))])
    sig = Signature([(fixtures.POINT, pt), (c, Wc), (eh.x, cell), (eh.y, eh.typing[eh.y])])
    verdict = typecheck(eh.diagram, sig)
    assert not verdict and verdict.address == (0, 0, 0) and verdict.generator == eh.x


def test_signature_rejects_bad_entries():
    x = Generator("x", 2)
    with pytest.raises(SignatureError, match="dimension"):
        Signature([(x, pt)])
    with pytest.raises(SignatureError, match="twice"):
        Signature([(fixtures.POINT, pt), (fixtures.POINT, pt)])
    eh = fixtures.eckmann_hilton()
    with pytest.raises(SignatureError, match="undeclared"):
        Signature([(eh.x, eh.typing[eh.x])])


def test_clashing_label_raises():
    eh = fixtures.eckmann_hilton()
    other = Signature([(fixtures.POINT, pt), (Generator("x", 3), fixtures.syllepsis().typing[Generator("x", 3)]),
                       (eh.y, eh.typing[eh.y])])
    with pytest.raises(SignatureError, match="clashes"):
        typecheck(eh.diagram, other)


def test_unknown_non_content_label_raises():
    # the point never occurs as content of the Eckmann-Hilton diagram
    with pytest.raises(SignatureError, match="unknown"):
        typecheck(fixtures.eckmann_hilton().diagram, Signature([]))


def test_non_globular_input_raises():
    a = Diagram0(Generator("a", 1))
    X = DiagramN.from_cospans(pt, [(identity_map(pt), identity_map(pt))])
    Y = DiagramN.from_cospans(a, [(identity_map(a), identity_map(a))])
    up = MapN(X, Y, [0], [Map0(pt, a)] * 2, [Map0(pt, a)])
    d = DiagramN.from_cospans(X, [(up, up)])
    sig = Signature([(fixtures.POINT, pt), (Generator("a", 1), fixtures._word(pt, [Generator("a", 1)]))])
    with pytest.raises(GlobularityError):
        typecheck(d, sig)
