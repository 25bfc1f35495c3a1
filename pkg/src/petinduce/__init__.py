"""Exact polytope exchange transformations, Rauzy induction of toral Z^2-rotations,
and two-dimensional substitutions over the golden-mean field Q(phi)."""
from .exactfield import BACKEND, FieldElem, PHI, parse, format_elem
from .geometry import ConvexPolytope, HalfSpace, box, clip, intersect, polytope, volume
from .partition import LabeledPartition, keys_permutation, refine
from .pet import LatticeSpec, Pet, code_config, compose, inverse, toral_translation
from .induction import InductionResult, induced_partition, induced_transformation
from .words import Morphism2D, Word2D

__all__ = [
    "BACKEND", "FieldElem", "PHI", "parse", "format_elem",
    "ConvexPolytope", "HalfSpace", "box", "clip", "intersect", "polytope", "volume",
    "LabeledPartition", "keys_permutation", "refine",
    "LatticeSpec", "Pet", "code_config", "compose", "inverse", "toral_translation",
    "InductionResult", "induced_partition", "induced_transformation",
    "Morphism2D", "Word2D",
]
__version__ = "0.1.0"
