import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from zignorm import fixtures
from zignorm import serialization as ser
from zignorm.core import Sink
from zignorm.corpus import random_sink
from zignorm.errors import ParseError, ValidationError
from zignorm.normalisation import normalise_sink

from support import bad_square_diagram

DATA = Path(__file__).parent / "data"


def roundtrip_diagram(d):
    text = ser.dumps(ser.diagram_document(d))
    back = ser.read_diagram(text)
    assert back is d
    assert ser.dumps(ser.diagram_document(back)) == text


@pytest.mark.parametrize("name", ["unit_removal", "planar_diagram", "eckmann_hilton", "syllepsis"])
def test_fixture_diagrams_round_trip(name):
    roundtrip_diagram(getattr(fixtures, name)().diagram)


def test_maps_and_sinks_round_trip():
    fx = fixtures.essential_identity()
    for f in (fx.p, fx.q):
        assert ser.read_map(ser.dumps(ser.map_document(f))) is f
    sink = Sink(fx.M, (fx.p, fx.q))
    back = ser.read_sink(ser.dumps(ser.sink_document(sink)))
    assert back.target is fx.M and back.legs == sink.legs


def test_signature_round_trip():
    sig = fixtures.syllepsis().signature
    back = ser.read_signature(ser.dumps(ser.signature_document(sig)))
    assert back.entries() == sig.entries()


def test_result_round_trip():
    fx = fixtures.collapse_walkthrough()
    sink = Sink(fx.T, (fx.leg,))
    r = normalise_sink(sink)
    back = ser.read_result(ser.dumps(ser.result_document(r)), fx.T, sink.legs)
    assert back.normal_form is r.normal_form and back.normaliser is r.normaliser
    assert back.factorisations == r.factorisations


@given(st.integers(0, 2**64 - 1))
def test_random_sinks_round_trip(seed):
    sink = random_sink(seed)
    text = ser.dumps(ser.sink_document(sink))
    back = ser.read_sink(text)
    assert back.target is sink.target and back.legs == sink.legs
    assert ser.dumps(ser.sink_document(back)) == text


def test_encoding_is_canonical():
    d = fixtures.eckmann_hilton().diagram
    text = ser.dumps(ser.diagram_document(d))
    shuffled = json.dumps(json.loads(text), indent=2, sort_keys=False)
    assert ser.dumps(ser.diagram_document(ser.read_diagram(shuffled))) == text
    assert "\n" not in text and ", " not in text


def test_checked_in_files_match_fixtures():
    assert ser.read_diagram((DATA / "planar.json").read_text()) is fixtures.planar_diagram().diagram
    assert ser.read_diagram((DATA / "unit-removal.json").read_text()) is fixtures.unit_removal().diagram
    fx = fixtures.essential_identity()
    M = ser.read_diagram((DATA / "essential-identity.json").read_text())
    assert M is fx.M
    assert ser.read_map((DATA / "essential-identity-leg1.json").read_text(), target=M) is fx.q
    sig = ser.read_signature((DATA / "eckmann-hilton-sig.json").read_text())
    assert sig.entries() == fixtures.eckmann_hilton().signature.entries()


def test_truncated_input():
    text = (DATA / "planar.json").read_text()
    with pytest.raises(ParseError, match="invalid JSON"):
        ser.read_diagram(text[: len(text) // 2])


def test_missing_format():
    with pytest.raises(ParseError, match="format"):
        ser.read_diagram('{"dim":0,"generator":{"name":"p","dimension":0}}')


def test_schema_errors_carry_a_pointer():
    doc = ser.diagram_document(fixtures.eckmann_hilton().diagram)
    doc["forward"][0]["monotone"] = [0, 0, 0]
    with pytest.raises(ParseError) as err:
        ser.read_diagram(json.dumps(doc))
    assert err.value.pointer == "/forward/0/monotone"

    doc["forward"][0]["monotone"] = [1, 0]
    with pytest.raises(ParseError, match="monotone") as err:
        ser.read_diagram(json.dumps(doc))
    assert err.value.pointer == "/forward/0/monotone"

    doc = ser.diagram_document(fixtures.unit_removal().diagram)
    doc["regular"][2]["generator"]["dimension"] = "zero"
    with pytest.raises(ParseError) as err:
        ser.read_diagram(json.dumps(doc))
    assert err.value.pointer == "/regular/2/generator/dimension"

    doc = ser.diagram_document(fixtures.unit_removal().diagram)
    del doc["singular"][0]["generator"]
    with pytest.raises(ParseError) as err:
        ser.read_diagram(json.dumps(doc))
    assert err.value.pointer == "/singular/0"

    doc = ser.diagram_document(fixtures.unit_removal().diagram)
    doc["backward"][0]["target"] = "g"
    with pytest.raises(ParseError) as err:
        ser.read_diagram(json.dumps(doc))
    assert err.value.pointer == "/backward/0/target"


def test_slice_counts_are_cross_checked():
    doc = ser.diagram_document(fixtures.eckmann_hilton().diagram)
    doc["forward"][0]["regular_slices"].pop()
    with pytest.raises(ParseError) as err:
        ser.read_diagram(json.dumps(doc))
    assert err.value.pointer == "/forward/0/regular_slices"


def test_non_commuting_input_is_a_validation_error():
    text = ser.dumps(ser.diagram_document(bad_square_diagram()))
    with pytest.raises(ValidationError) as err:
        ser.read_diagram(text)
    assert err.value.path == ("forward 0", "height 0")
    assert ser.read_diagram(text, check=False) is bad_square_diagram()
