"""Zigzag diagrams, degeneracies and normal forms."""

from .core import (
    Diagram, Diagram0, DiagramMap, DiagramN, Generator, Map0, MapN, Sink, compose_maps, identity_map,
    is_identity, lift, thin_map, validate_diagram, validate_map,
)
from .degeneracy import is_degeneracy, pullback
from .errors import (
    AddressError, BudgetExceeded, CompositionError, DimensionMismatchError, GlobularityError, ParseError,
    SignatureError, ValidationError, ZigzagError,
)
from .globularity import is_globular, is_globular_map, is_regularly_normalising
from .normalisation import NormalisationResult, is_normal, normalise, normalise_relative, normalise_sink
from .ordmaps import Monotone, wraith_dual
from .typechecker import Signature, Verdict, extract_piece, singular_content, typecheck



def clear_caches():
    """Drop every memo table, e.g. before timing a cold run."""
    import sys
    for name, module in list(sys.modules.items()):
        if name == __name__ or name.startswith(__name__ + "."):
            for value in list(vars(module).values()):
                if callable(getattr(value, "cache_clear", None)) and getattr(value, "__module__", None) == name:
                    value.cache_clear()


__all__ = [
    "AddressError", "BudgetExceeded", "CompositionError", "Diagram", "Diagram0", "DiagramMap", "DiagramN",
    "DimensionMismatchError", "Generator", "GlobularityError", "Map0", "MapN", "Monotone",
    "NormalisationResult", "ParseError", "Signature", "SignatureError", "Sink", "ValidationError", "Verdict",
    "ZigzagError", "clear_caches", "compose_maps", "extract_piece", "identity_map", "is_degeneracy", "is_globular",
    "is_globular_map", "is_identity", "is_normal", "is_regularly_normalising", "lift", "normalise",
    "normalise_relative", "normalise_sink", "pullback", "singular_content", "thin_map", "typecheck",
    "validate_diagram", "validate_map", "wraith_dual",
]
