"""Tiny text rendering shared by the demo scripts."""

from zignorm.core import Diagram0, DiagramN


def word(d) -> str:
    """A 1-diagram as its row of singular labels, e.g. ``* f *``."""
    if isinstance(d, Diagram0):
        return d.generator.name
    if d.dimension == 1:
        parts = [d.regulars[0].generator.name]
        for s, r in zip(d.singulars, d.regulars[1:]):
            parts += [s.generator.name, r.generator.name]
        return " ".join(parts)
    return f"{d.dimension}-diagram of length {d.length}"


def levels(d: DiagramN) -> str:
    """A 2-diagram as the sequence of its singular rows, bottom to top."""
    return " | ".join(f"[{word(s)}]" for s in d.singulars) or "(no levels)"
