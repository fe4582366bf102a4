"""JSON encoding of diagrams, maps, sinks, signatures and normal forms.

Encoding is canonical: keys are sorted and separators fixed, so equal
structures give byte-identical output.  Decoding checks the shape of every
object and reports problems with a JSON pointer to the offending value.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .core import (
    Diagram, Diagram0, DiagramMap, DiagramN, Generator, Map0, MapN, Sink, validate_diagram, validate_map,
)
from .errors import ParseError, ValidationError, ZigzagError
from .normalisation import NormalisationResult
from .ordmaps import Monotone, wraith_dual
from .typechecker import Signature

FORMAT = "zignorm/1"


# -- encoding ---------------------------------------------------------------------


def encode_diagram(d: Diagram) -> dict:
    if isinstance(d, Diagram0):
        g = d.generator
        return {"dim": 0, "generator": {"name": g.name, "dimension": g.dimension}}
    return {
        "dim": d.dimension,
        "regular": [encode_diagram(x) for x in d.regulars],
        "singular": [encode_diagram(x) for x in d.singulars],
        "forward": [encode_map(f) for f in d.forward],
        "backward": [encode_map(f) for f in d.backward],
    }


def encode_map(f: DiagramMap) -> dict:
    if isinstance(f, Map0):
        return {"dim": 0, "source": f.source.generator.name, "target": f.target.generator.name}
    return {
        "dim": f.dimension,
        "monotone": list(f.singular.values),
        "regular_slices": [encode_map(s) for s in f.regular_slices],
        "singular_slices": [encode_map(s) for s in f.singular_slices],
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def diagram_document(d: Diagram) -> dict:
    return {"format": FORMAT, **encode_diagram(d)}


def map_document(f: DiagramMap) -> dict:
    return {"format": FORMAT, "source": encode_diagram(f.source), "target": encode_diagram(f.target),
            "map": encode_map(f)}


def sink_document(sink: Sink) -> dict:
    return {"format": FORMAT, "target": encode_diagram(sink.target),
            "legs": [{"source": encode_diagram(f.source), "map": encode_map(f)} for f in sink.legs]}


def signature_document(sig: Signature) -> dict:
    return {"format": FORMAT, "generators": [
        {"name": g.name, "dimension": g.dimension, "diagram": encode_diagram(d)} for g, d in sig.entries()
    ]}


def result_document(r: NormalisationResult) -> dict:
    return {"format": FORMAT, "normal_form": encode_diagram(r.normal_form),
            "normaliser": encode_map(r.normaliser),
            "factorisations": [encode_map(f) for f in r.factorisations]}


# -- decoding ---------------------------------------------------------------------


def _field(obj, key, kind, ptr):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", ptr)
    if key not in obj:
        raise ParseError(f"missing field '{key}'", ptr)
    value = obj[key]
    if kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        raise ParseError(f"expected {kind.__name__}", f"{ptr}/{key}")
    return value


def _guard(fn, ptr, *args):
    try:
        return fn(*args)
    except ParseError:
        raise
    except ValidationError as e:
        raise ParseError(str(e), ptr) from None
    except (ValueError, TypeError, ZigzagError) as e:
        raise ParseError(str(e), ptr) from None


def decode_diagram(obj: Any, ptr: str = "") -> Diagram:
    dim = _field(obj, "dim", int, ptr)
    if dim < 0:
        raise ParseError("negative dimension", f"{ptr}/dim")
    if dim == 0:
        g = _field(obj, "generator", dict, ptr)
        name = _field(g, "name", str, f"{ptr}/generator")
        gdim = _field(g, "dimension", int, f"{ptr}/generator")
        return _guard(lambda: Diagram0(Generator(name, gdim)), f"{ptr}/generator")
    regs = [decode_diagram(x, f"{ptr}/regular/{i}") for i, x in enumerate(_field(obj, "regular", list, ptr))]
    sings = [decode_diagram(x, f"{ptr}/singular/{i}") for i, x in enumerate(_field(obj, "singular", list, ptr))]
    fwd_raw, bwd_raw = _field(obj, "forward", list, ptr), _field(obj, "backward", list, ptr)
    for key, items in (("regular", regs), ("singular", sings)):
        for i, x in enumerate(items):
            if x.dimension != dim - 1:
                raise ParseError(f"expected dimension {dim - 1}", f"{ptr}/{key}/{i}")
    if not regs or len(regs) != len(sings) + 1 or len(fwd_raw) != len(sings) or len(bwd_raw) != len(sings):
        raise ParseError("zigzag arity mismatch", ptr)
    fwd = [decode_map(x, regs[i], sings[i], f"{ptr}/forward/{i}") for i, x in enumerate(fwd_raw)]
    bwd = [decode_map(x, regs[i + 1], sings[i], f"{ptr}/backward/{i}") for i, x in enumerate(bwd_raw)]
    return _guard(DiagramN, ptr, regs, sings, fwd, bwd)


def decode_map(obj: Any, source: Diagram, target: Diagram, ptr: str = "") -> DiagramMap:
    dim = _field(obj, "dim", int, ptr)
    if dim != source.dimension or dim != target.dimension:
        raise ParseError(f"map of dimension {dim} between {source.dimension}-diagrams", f"{ptr}/dim")
    if dim == 0:
        s, t = _field(obj, "source", str, ptr), _field(obj, "target", str, ptr)
        if s != source.generator.name:
            raise ParseError(f"source is {source.generator.name}, not {s}", f"{ptr}/source")
        if t != target.generator.name:
            raise ParseError(f"target is {target.generator.name}, not {t}", f"{ptr}/target")
        return _guard(Map0, ptr, source, target)
    values = _field(obj, "monotone", list, ptr)
    for i, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError("expected an integer", f"{ptr}/monotone/{i}")
    if len(values) != source.length:
        raise ParseError(f"monotone has {len(values)} entries, source has length {source.length}", f"{ptr}/monotone")
    mono = _guard(Monotone, f"{ptr}/monotone", tuple(values), target.length)
    reg = wraith_dual(mono)
    rs_raw = _field(obj, "regular_slices", list, ptr)
    ss_raw = _field(obj, "singular_slices", list, ptr)
    if len(rs_raw) != target.length + 1:
        raise ParseError(f"expected {target.length + 1} regular slices", f"{ptr}/regular_slices")
    if len(ss_raw) != source.length:
        raise ParseError(f"expected {source.length} singular slices", f"{ptr}/singular_slices")
    rs = [decode_map(x, source.regulars[reg(i)], target.regulars[i], f"{ptr}/regular_slices/{i}")
          for i, x in enumerate(rs_raw)]
    ss = [decode_map(x, source.singulars[j], target.singulars[mono(j)], f"{ptr}/singular_slices/{j}")
          for j, x in enumerate(ss_raw)]
    return _guard(MapN, ptr, source, target, mono, rs, ss)


def loads(text: str) -> Any:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg} at line {e.lineno} column {e.colno}") from None
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object at the top level")
    fmt = obj.get("format")
    if fmt != FORMAT:
        raise ParseError(f"unsupported format {fmt!r}, expected {FORMAT!r}", "/format")
    return obj


def _checked_diagram(obj, ptr, check: bool) -> Diagram:
    d = decode_diagram(obj, ptr)
    if check:
        report = validate_diagram(d)
        if not report:
            raise ValidationError(report.message, report.path)
    return d


def read_diagram(text: str, check: bool = True) -> Diagram:
    obj = loads(text)
    body = {k: v for k, v in obj.items() if k != "format"}
    return _checked_diagram(body, "", check)


def read_map(text: str, target: Optional[Diagram] = None, check: bool = True) -> DiagramMap:
    """A map document; ``target`` may be supplied when the document omits it."""
    obj = loads(text)
    source = _checked_diagram(_field(obj, "source", dict, ""), "/source", check)
    if "target" in obj:
        declared = _checked_diagram(obj["target"], "/target", check)
        if target is not None and declared is not target:
            raise ParseError("map target differs from the diagram it is used with", "/target")
        target = declared
    if target is None:
        raise ParseError("missing field 'target'", "")
    f = decode_map(_field(obj, "map", dict, ""), source, target, "/map")
    if check:
        report = validate_map(f)
        if not report:
            raise ValidationError(report.message, report.path)
    return f


def read_sink(text: str, check: bool = True) -> Sink:
    obj = loads(text)
    target = _checked_diagram(_field(obj, "target", dict, ""), "/target", check)
    legs = []
    for i, leg in enumerate(_field(obj, "legs", list, "")):
        source = _checked_diagram(_field(leg, "source", dict, f"/legs/{i}"), f"/legs/{i}/source", check)
        f = decode_map(_field(leg, "map", dict, f"/legs/{i}"), source, target, f"/legs/{i}/map")
        if check and not validate_map(f):
            report = validate_map(f)
            raise ValidationError(report.message, (f"leg {i}",) + report.path)
        legs.append(f)
    return Sink(target, tuple(legs))


def read_signature(text: str) -> Signature:
    obj = loads(text)
    entries = []
    for i, item in enumerate(_field(obj, "generators", list, "")):
        ptr = f"/generators/{i}"
        name = _field(item, "name", str, ptr)
        dim = _field(item, "dimension", int, ptr)
        d = _checked_diagram(_field(item, "diagram", dict, ptr), f"{ptr}/diagram", True)
        entries.append((_guard(Generator, ptr, name, dim), d))
    return Signature(entries)


def read_result(text: str, target: Diagram, legs=()) -> NormalisationResult:
    obj = loads(text)
    N = decode_diagram(_field(obj, "normal_form", dict, ""), "/normal_form")
    d = decode_map(_field(obj, "normaliser", dict, ""), N, target, "/normaliser")
    facts = tuple(decode_map(x, leg.source, N, f"/factorisations/{i}")
                  for i, (x, leg) in enumerate(zip(_field(obj, "factorisations", list, ""), legs)))
    return NormalisationResult(N, d, facts)
