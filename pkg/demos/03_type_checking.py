"""Type checking by pieces, on the Eckmann-Hilton and Syllepsis diagrams.

Each point of singular content is cut out together with what maps onto it,
and the resulting piece must normalise to the typing diagram of its label.

Run with ``python demos/03_type_checking.py``.
"""

import time

from _show import levels

from zignorm import Signature, extract_piece, fixtures, normalise, singular_content, typecheck
from zignorm.core import is_identity, lift

eh = fixtures.eckmann_hilton()
print("== Eckmann-Hilton ==")
print("source:", levels(eh.before), " middle:", levels(eh.middle), " target:", levels(eh.after))
for address, g in singular_content(eh.diagram):
    print("content", g.name, "at", address)

piece = extract_piece(eh.diagram, (0, 0, 0))
below = piece.source
print("x piece, below:", levels(below),
      "(second level identity:", all(is_identity(f) for f in below.cospan(1)), ")")
print("x piece normalises to the type of x:", normalise(piece).normal_form is lift(eh.typing[eh.x], 3))

t0 = time.perf_counter()
verdict = typecheck(eh.diagram, eh.signature)
print(f"verdict: {verdict.accepted} in {1e3 * (time.perf_counter() - t0):.2f} ms")

without_y = Signature([(fixtures.POINT, eh.typing[eh.x].source.source), (eh.x, eh.typing[eh.x])])
v = typecheck(eh.diagram, without_y)
print("without y in the signature:", v.accepted, "at", v.address, "-", v.reason)

print("\n== Syllepsis ==")
sy = fixtures.syllepsis()
print(f"a {sy.diagram.dimension}-diagram with content",
      [(a, g.name) for a, g in singular_content(sy.diagram)])
t0 = time.perf_counter()
verdict = typecheck(sy.diagram, sy.signature)
print(f"verdict: {verdict.accepted} in {1e3 * (time.perf_counter() - t0):.2f} ms")
