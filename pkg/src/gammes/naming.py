"""French note names for positions on the line of fifths.

Index k is written ``k = r + 7q`` with ``r`` in ``-1..5``; ``r`` picks the
letter (fa, do, sol, ré, la, mi, si) and ``q`` counts sharps (positive) or
flats (negative). Alterations are unbounded: the engine never collapses
enharmonic neighbours such as si♯ and do.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from functools import cmp_to_key

from .pitch import Pitch, compare, xi

__all__ = [
    "BASES",
    "NoteName",
    "name_of",
    "index_of",
    "parse_note",
    "parse_pitch",
    "format_note",
    "format_pitch",
    "sort_by_pitch",
]

# residue r in -1..5 -> base name
BASES = {-1: "fa", 0: "do", 1: "sol", 2: "ré", 3: "la", 4: "mi", 5: "si"}
_RESIDUE = {name: r for r, name in BASES.items()}

_NOTE_RE = re.compile(r"^(do|re|mi|fa|sol|la|si)(#*|b*)(\**|,*)$")


@dataclass(frozen=True)
class NoteName:
    base: str
    alteration: int = 0

    def render(self, ascii: bool = False) -> str:
        if self.alteration > 0:
            mark = "#" if ascii else "♯"
        else:
            mark = "b" if ascii else "♭"
        base = _ascii(self.base) if ascii else self.base
        return base + mark * abs(self.alteration)

    def __str__(self) -> str:
        return self.render()


def _ascii(text: str) -> str:
    return unicodedata.normalize("NFKD", text).encode("ascii", "ignore").decode()


def name_of(k: int) -> NoteName:
    q, r = divmod(k + 1, 7)
    return NoteName(BASES[r - 1], q)


def index_of(n: NoteName) -> int:
    try:
        r = _RESIDUE[n.base]
    except KeyError:
        raise ValueError(f"unknown note base {n.base!r}") from None
    return r + 7 * n.alteration


def _split(text: str) -> tuple[int, int]:
    # sharp/flat signs must be mapped before NFKD strips non-ASCII
    s = text.strip().lower().replace("♯", "#").replace("♭", "b").replace("✻", "*")
    s = _ascii(s)
    m = _NOTE_RE.match(s)
    if m is None:
        raise ValueError(f"cannot parse note name {text!r}")
    base, alter, octave = m.groups()
    base = "ré" if base == "re" else base
    alteration = len(alter) if alter.startswith("#") else -len(alter)
    shift = len(octave) if octave.startswith("*") else -len(octave)
    return index_of(NoteName(base, alteration)), shift


def parse_note(text: str) -> int:
    """Parse ``base ("#"* | "b"*)`` into a fifth index; no octave marks."""
    k, shift = _split(text)
    if shift:
        raise ValueError(f"octave marks not allowed here: {text!r}")
    return k


def parse_pitch(text: str) -> Pitch:
    """Parse a note name with optional ``*`` (octave up) or ``,`` (down) marks."""
    k, shift = _split(text)
    return Pitch(k, shift)


def format_note(k: int, ascii: bool = False) -> str:
    return name_of(k).render(ascii)


def format_pitch(p: Pitch, ascii: bool = False) -> str:
    mark = "*" * p.octave if p.octave >= 0 else "," * -p.octave
    return format_note(p.note, ascii) + mark


def sort_by_pitch(k_from: int, k_to: int) -> list[int]:
    """Indices ``k_from..k_to`` ordered by increasing ``xi(k)``."""
    if k_from > k_to:
        raise ValueError("k_from must not exceed k_to")
    return sorted(range(k_from, k_to + 1), key=cmp_to_key(lambda a, b: compare(xi(a), xi(b))))
