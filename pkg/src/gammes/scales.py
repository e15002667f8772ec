"""Scales as tone/semitone words realized on a tonality."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations
from typing import Iterator, Sequence

from .families import Family, family, family_xi_indices
from .pitch import Pitch, PitchRatio, compare, ell

__all__ = [
    "Step",
    "ScaleStructure",
    "Scale",
    "DEFAULT_ENUMERATION_LIMIT",
    "parse_word",
    "enumerate_structures",
    "build_scale",
    "structure_of",
    "scale_from_pitches",
    "transpose",
    "scale_equal",
]

DEFAULT_ENUMERATION_LIMIT = 6


class Step(IntEnum):
    """One interval of a scale. Tone sorts before Semitone."""

    TONE = 0
    SEMITONE = 1

    @property
    def letter(self) -> str:
        return "T" if self is Step.TONE else "S"


# matched after upper-casing, so θ/δ appear as Θ/Δ
_LETTERS = {"T": Step.TONE, "Θ": Step.TONE, "S": Step.SEMITONE, "D": Step.SEMITONE, "Δ": Step.SEMITONE}


def parse_word(word: str) -> tuple[Step, ...]:
    """Read a step word such as ``"TTSTTTS"`` (``θ``/``δ`` and ``D`` also accepted)."""
    try:
        return tuple(_LETTERS[c] for c in word.strip().upper().replace(",", "").replace(" ", ""))
    except KeyError as exc:
        raise ValueError(f"invalid step letter {exc.args[0]!r} in {word!r}") from None


@dataclass(frozen=True)
class ScaleStructure:
    family_k: int
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        f = family(self.family_k)
        tones = sum(1 for s in self.steps if s is Step.TONE)
        if len(self.steps) != f.p or tones != f.tones:
            raise ValueError(
                f"family {self.family_k} needs {f.tones} tones among {f.p} steps, "
                f"got {self.word!r}"
            )

    @classmethod
    def from_word(cls, family_k: int, word: str) -> ScaleStructure:
        return cls(family_k, parse_word(word))

    @property
    def family(self) -> Family:
        return family(self.family_k)

    @property
    def word(self) -> str:
        return "".join(s.letter for s in self.steps)

    @property
    def p(self) -> int:
        return len(self.steps)

    def rotate(self, i: int) -> ScaleStructure:
        """Start the word at position ``i`` (left rotation)."""
        i %= self.p
        return ScaleStructure(self.family_k, self.steps[i:] + self.steps[:i])

    def ratios(self) -> list[PitchRatio]:
        f = self.family
        return [f.theta if s is Step.TONE else f.delta for s in self.steps]

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class Scale:
    structure: ScaleStructure
    tonality: Pitch
    pitches: tuple[Pitch, ...]

    @property
    def family_k(self) -> int:
        return self.structure.family_k

    @property
    def notes(self) -> list[int]:
        """Fifth indices of the p scale degrees, octave dropped."""
        return [pt.note for pt in self.pitches[:-1]]


def enumerate_structures(
    family_k: int, *, force: bool = False, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[ScaleStructure]:
    """Yield every placement of the family's tones, in lexicographic order.

    Families above ``limit`` hold tens of millions of words and are refused
    unless ``force`` is set.
    """
    if family_k < 1:
        raise ValueError(f"family index must be >= 1, got {family_k}")
    if family_k > limit and not force:
        raise ValueError(f"family {family_k} is above the enumeration limit {limit}; pass force")
    f = family(family_k)
    # tone positions in lexicographic order give words in lexicographic order
    for positions in combinations(range(f.p), f.tones):
        steps = [Step.SEMITONE] * f.p
        for j in positions:
            steps[j] = Step.TONE
        yield ScaleStructure(family_k, tuple(steps))


def build_scale(s: ScaleStructure, tonality: Pitch) -> Scale:
    """Realize ``s`` from ``tonality`` by index shifts on the line of fifths.

    A tone moves the note index by ``eps * D`` and a semitone by ``-eps * T``;
    the octave is whatever makes the absolute ratio equal the running product.
    """
    f = s.family
    shift = dict(zip((Step.TONE, Step.SEMITONE), family_xi_indices(f)))
    step_ratio = {Step.TONE: f.theta, Step.SEMITONE: f.delta}
    current = tonality
    target = tonality.ratio
    pitches = [current]
    for step in s.steps:
        target = target * step_ratio[step]
        note = current.note + shift[step]
        if target.pow3 != note:
            raise AssertionError("step ratio and index shift disagree")
        current = Pitch(note, ell(note) - target.pow2)
        pitches.append(current)
    if pitches[-1] != tonality.shift_octaves(1):
        raise AssertionError("scale does not close on the octave")
    return Scale(s, tonality, tuple(pitches))


def _infer_steps(pitches: Sequence[Pitch], f: Family) -> tuple[Step, ...]:
    steps = []
    for a, b in zip(pitches, pitches[1:]):
        r = b.ratio / a.ratio
        if r == f.theta:
            steps.append(Step.TONE)
        elif r == f.delta:
            steps.append(Step.SEMITONE)
        else:
            raise ValueError(f"interval {r} between {a} and {b} is not a step of family {f.k}")
    return tuple(steps)


def structure_of(sc: Scale) -> ScaleStructure:
    """Recover the step word from the realized pitches."""
    f = family(sc.family_k)
    return ScaleStructure(f.k, _infer_steps(sc.pitches, f))


def scale_from_pitches(pitches: Sequence[Pitch], family_k: int) -> Scale:
    """Build a Scale from an explicit pitch list, checking every interval."""
    f = family(family_k)
    s = ScaleStructure(family_k, _infer_steps(pitches, f))
    sc = build_scale(s, pitches[0])
    if sc.pitches != tuple(pitches):
        raise ValueError("pitch list does not match its own structure")
    return sc


def transpose(sc: Scale, new_tonality: Pitch) -> Scale:
    return build_scale(structure_of(sc), new_tonality)


def scale_equal(a: Scale, b: Scale) -> bool:
    """True iff both pitch sequences are equal as exact absolute ratios."""
    return len(a.pitches) == len(b.pitches) and all(
        compare(x.ratio, y.ratio) == 0 for x, y in zip(a.pitches, b.pitches)
    )
