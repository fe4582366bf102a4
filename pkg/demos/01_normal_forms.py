"""Normal forms on three small examples.

1. A cell followed by an identity level: the identity goes away.
2. An identity level that a map into the diagram depends on: it stays,
   unless we normalise without that map.
3. A level that only becomes an identity after its slices are normalised,
   next to one that a leg still needs.

Run with ``python demos/01_normal_forms.py``.
"""

from _show import levels, word

from zignorm import fixtures, normalise, normalise_relative
from zignorm.core import compose_maps, is_identity

print("== unit removal ==")
fx = fixtures.unit_removal()
r = normalise(fx.diagram)
print("input:      ", word(fx.diagram))
print("normal form:", word(r.normal_form))
print("normaliser hits heights", list(r.normaliser.singular.values), "of", fx.diagram.length)

print("\n== an identity level kept alive by a sink ==")
fx = fixtures.essential_identity()
print("M has", fx.M.length, "level, and it is an identity:", all(is_identity(f) for f in fx.M.cospan(0)))
print("q squashes the", fx.T.length, "levels of T into it; p includes the empty diagram")
rel = normalise_relative(fx.M, [fx.p, fx.q])
print("relative to {p, q}: normaliser is identity ->", is_identity(rel.normaliser))
print("with no sink:       normal form has length", normalise(fx.M).normal_form.length)

print("\n== levels collapsing after slices are normalised ==")
fx = fixtures.collapse_walkthrough()
print("target levels:", levels(fx.T))
r = normalise_relative(fx.T, [fx.leg])
print("the leg hits heights", list(fx.leg.singular.values))
print("parallel part normalises slices:", levels(r.parallel.source))
print("simple part removes heights", sorted(set(range(r.parallel.source.length)) - set(r.simple.singular.values)))
print("normal form levels:", levels(r.normal_form))
print("normaliser = simple then parallel:", compose_maps(r.simple, r.parallel) is r.normaliser)
print("leg factors through it:", compose_maps(r.factorisations[0], r.normaliser) is fx.leg)
