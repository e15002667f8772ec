"""Types (rotation classes of structures) and their modes."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .families import family
from .naming import format_note
from .pitch import Pitch
from .scales import (
    DEFAULT_ENUMERATION_LIMIT,
    Scale,
    ScaleStructure,
    build_scale,
    enumerate_structures,
)

__all__ = [
    "TypeClass",
    "ModeDescriptor",
    "REFERENCE_TYPES",
    "MODE_NAMES",
    "classify_type",
    "count_types",
    "types_of",
    "type_by_label",
    "modes_of",
    "mode_scale",
]

# Representatives chosen by tradition, which are not always the minimal
# rotation: (family, label) -> word.
REFERENCE_TYPES: dict[tuple[int, str], str] = {
    (1, "τ¹"): "TS",
    (2, "τ²"): "TST",
    (3, "τ³₁"): "TSSST",
    (3, "τ³₂"): "STSTS",
    (4, "τ⁴₁"): "TTSSTTT",
    (4, "τ⁴₂"): "TTSTSTT",
    (4, "τ⁴₃"): "TTSTTTS",
}

# (family, label, rotation) -> traditional mode name
MODE_NAMES: dict[tuple[int, str, int], str] = {
    (3, "τ³₂", 3): "pentatonique mineure",
    (3, "τ³₂", 4): "pentatonique majeure",
    (4, "τ⁴₁", 0): "arabe",
    (4, "τ⁴₁", 3): "napolitain",
    (4, "τ⁴₁", 4): "gamme par tons et sensible",
    (4, "τ⁴₁", 5): "hypolydien",
    (4, "τ⁴₁", 6): "lydien-phrygien",
    (4, "τ⁴₂", 6): "Bartok / Raga Vachaspati",
    (4, "τ⁴₃", 0): "ionien",
    (4, "τ⁴₃", 1): "dorien",
    (4, "τ⁴₃", 2): "phrygien",
    (4, "τ⁴₃", 3): "lydien",
    (4, "τ⁴₃", 4): "mixolydien",
    (4, "τ⁴₃", 5): "éolien",
    (4, "τ⁴₃", 6): "locrien",
}


def _rotations(s: ScaleStructure) -> tuple[ScaleStructure, ...]:
    return tuple(s.rotate(i) for i in range(s.p))


@dataclass(frozen=True)
class TypeClass:
    """A rotation class of structures.

    Identity is the canonical (lexicographically minimal) rotation. When the
    class has a traditional representative, ``representative`` holds it and
    ``offset`` is the rotation taking the canonical word to it.
    """

    family_k: int
    canonical: ScaleStructure
    rotations: tuple[ScaleStructure, ...] = field(compare=False)
    reference_label: str | None = field(default=None, compare=False)
    representative: ScaleStructure | None = field(default=None, compare=False)
    offset: int = field(default=0, compare=False)

    @property
    def fundamental(self) -> ScaleStructure:
        return self.representative if self.representative is not None else self.canonical

    @property
    def p(self) -> int:
        return self.canonical.p

    def __contains__(self, s: ScaleStructure) -> bool:
        return s in self.rotations


def _reference_for(canonical: ScaleStructure) -> tuple[str, ScaleStructure] | None:
    for (k, label), word in REFERENCE_TYPES.items():
        if k != canonical.family_k:
            continue
        rep = ScaleStructure.from_word(k, word)
        if min(_rotations(rep), key=lambda r: r.steps) == canonical:
            return label, rep
    return None


def classify_type(s: ScaleStructure) -> TypeClass:
    rotations = _rotations(s)
    canonical = min(rotations, key=lambda r: r.steps)
    ordered = _rotations(canonical)
    ref = _reference_for(canonical)
    if ref is None:
        return TypeClass(s.family_k, canonical, ordered)
    label, rep = ref
    return TypeClass(s.family_k, canonical, ordered, label, rep, ordered.index(rep))


def count_types(family_k: int) -> int:
    """``binomial(p, T) / p``; the division is exact for every family."""
    f = family(family_k)
    n, r = divmod(comb(f.p, f.tones), f.p)
    if r:
        raise ArithmeticError(f"binomial not divisible by p for family {family_k}")
    return n


def types_of(
    family_k: int, *, force: bool = False, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> list[TypeClass]:
    """All types of a family; labelled ones first in label order, then by word."""
    seen: dict[ScaleStructure, TypeClass] = {}
    for s in enumerate_structures(family_k, force=force, limit=limit):
        t = classify_type(s)
        seen.setdefault(t.canonical, t)
    labels = [label for (k, label) in REFERENCE_TYPES if k == family_k]

    def key(t: TypeClass) -> tuple[int, tuple[int, ...]]:
        pos = labels.index(t.reference_label) if t.reference_label in labels else len(labels)
        return pos, tuple(t.canonical.steps)

    return sorted(seen.values(), key=key)


def type_by_label(family_k: int, label: str, **kwargs) -> TypeClass:
    """Find a type by ``t<j>`` (1-based position in ``types_of``) or its reference label."""
    ts = types_of(family_k, **kwargs)
    for t in ts:
        if t.reference_label is not None and t.reference_label == label:
            return t
    text = label.strip().lower()
    if text.startswith("t") and text[1:].isdigit():
        j = int(text[1:])
        if 1 <= j <= len(ts):
            return ts[j - 1]
    raise KeyError(f"no type {label!r} in family {family_k}")


@dataclass(frozen=True)
class ModeDescriptor:
    type_class: TypeClass
    rotation_index: int
    mode_note: int
    traditional_name: str | None = None

    def display_name(self, ascii: bool = False) -> str:
        if self.traditional_name:
            return self.traditional_name
        return f"mode de {format_note(self.mode_note, ascii)}"


def mode_scale(t: TypeClass, i: int, tonality: Pitch) -> Scale:
    if not 0 <= i < t.p:
        raise ValueError(f"rotation index must be in 0..{t.p - 1}, got {i}")
    return build_scale(t.fundamental.rotate(i), tonality)


def modes_of(t: TypeClass) -> list[ModeDescriptor]:
    """One descriptor per rotation; the mode note is read off the fundamental scale on do."""
    base = build_scale(t.fundamental, Pitch(0))
    return [
        ModeDescriptor(
            t,
            i,
            base.pitches[i].note,
            MODE_NAMES.get((t.family_k, t.reference_label, i)) if t.reference_label else None,
        )
        for i in range(t.p)
    ]
