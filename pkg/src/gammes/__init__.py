"""Exact Pythagorean notes and recursive tone-breaking scale families."""

__version__ = "0.1.0"

from .families import Family, convergents, families, family, family_base, family_next
from .naming import format_note, name_of, parse_note, parse_pitch
from .pitch import Pitch, PitchRatio, cents, compare, decimal, ell, xi
from .scales import ScaleStructure, Scale, Step, build_scale, enumerate_structures, structure_of

__all__ = [
    "Family",
    "Pitch",
    "PitchRatio",
    "Scale",
    "ScaleStructure",
    "Step",
    "build_scale",
    "cents",
    "compare",
    "convergents",
    "decimal",
    "ell",
    "enumerate_structures",
    "families",
    "family",
    "family_base",
    "family_next",
    "format_note",
    "name_of",
    "parse_note",
    "parse_pitch",
    "structure_of",
    "xi",
]
