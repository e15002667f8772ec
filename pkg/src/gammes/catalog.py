"""Named scales: the small families on do, Helmholtz's five scales and the
Chinese pentatonic modes.

The data below is written as note sequences. Loading the catalog rebuilds
every scale from its own step word and checks the stated transposition
identities, so a typo here fails at import time rather than silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .naming import parse_pitch
from .pitch import Pitch, compare
from .scales import Scale, scale_equal, scale_from_pitches, transpose

__all__ = ["CatalogEntry", "named_catalog", "catalog_entry", "ascending_pitches"]


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    scale: Scale
    names: tuple[str, ...] = ()


# label -> (family, fifth indices on do, nicknames)
_ON_DO: list[tuple[str, int, tuple[int, ...], tuple[str, ...]]] = [
    ("G1_1", 1, (0, 1), ()),
    ("G1_2", 1, (0, -1), ()),
    ("G2_1", 2, (0, 2, 1), ()),
    ("G2_2", 2, (0, -1, 1), ()),
    ("G2_3", 2, (0, -1, -2), ()),
    ("G3_1", 3, (0, 2, 4, 1, 3), ("gamme pentatonique majeure", "gong diaoshi")),
    ("G3_2", 3, (0, 2, -1, 1, 3), ()),
    ("G3_3", 3, (0, 2, -1, 1, -2), ()),
    ("G3_4", 3, (0, 2, 4, 1, -2), ()),
    ("G3_5", 3, (0, -3, -1, 1, 3), ()),
    ("G3_6", 3, (0, -3, -1, 1, -2), ("gamme pentatonique mineure",)),
    ("G3_7", 3, (0, 2, -1, -4, -2), ()),
    ("G3_8", 3, (0, -3, -1, -4, -2), ()),
    ("G3_9", 3, (0, -3, -6, -4, -2), ()),
    ("G3_10", 3, (0, 2, 4, 6, 3), ()),
    ("G4_1", 4, (0, 2, 4, -1, -6, -4, -2), ("arabe",)),
    ("G4_2", 4, (0, 2, -3, -8, -6, -4, -2), ()),
    ("G4_3", 4, (0, -5, -10, -8, -6, -4, -2), ()),
    ("G4_4", 4, (0, -5, -3, -1, 1, 3, 5), ("napolitain",)),
    ("G4_5", 4, (0, 2, 4, 6, 8, 10, 5), ("gamme par tons et sensible",)),
    ("G4_6", 4, (0, 2, 4, 6, 8, 3, -2), ("hypolydien",)),
    ("G4_7", 4, (0, 2, 4, 6, 1, -4, -2), ("lydien-phrygien",)),
    ("G4_8", 4, (0, 2, 4, -1, 1, -4, -2), ()),
    ("G4_9", 4, (0, 2, -3, -1, -6, -4, -2), ()),
    ("G4_10", 4, (0, -5, -3, -8, -6, -4, -2), ()),
    ("G4_11", 4, (0, 2, -3, -1, 1, 3, 5), ()),
    ("G4_12", 4, (0, -5, -3, -1, 1, 3, -2), ()),
    ("G4_13", 4, (0, 2, 4, 6, 8, 3, 5), ()),
    ("G4_14", 4, (0, 2, 4, 6, 1, 3, -2), ("Bartok", "Raga Vachaspati")),
    ("G4_15", 4, (0, 2, 4, -1, 1, 3, 5), ("ionien", "majeur")),
    ("G4_16", 4, (0, 2, -3, -1, 1, 3, -2), ("dorien",)),
    ("G4_17", 4, (0, -5, -3, -1, 1, -4, -2), ("phrygien",)),
    ("G4_18", 4, (0, 2, 4, 6, 1, 3, 5), ("lydien",)),
    ("G4_19", 4, (0, 2, 4, -1, 1, 3, -2), ("mixolydien",)),
    ("G4_20", 4, (0, 2, -3, -1, 1, -4, -2), ("éolien",)),
    ("G4_21", 4, (0, -5, -3, -1, -6, -4, -2), ("locrien",)),
]

# label -> (written notes, family scale it transposes, its tonality)
_TRANSPOSED: list[tuple[str, str, str, str]] = [
    ("H1", "do ré fa sol si♭ do*", "G3_3", "do"),
    ("H2", "fa sol si♭ do* ré* fa*", "G3_2", "fa"),
    ("H3", "sol si♭ do* ré* fa* sol*", "G3_6", "sol"),
    ("H4", "si♭ do* ré* fa* sol* si♭*", "G3_1", "si♭"),
    ("H5", "ré fa sol si♭ do* ré*", "G3_8", "ré"),
    ("gong diaoshi", "do ré mi sol la do*", "G3_1", "do"),
    ("shang diaoshi", "ré mi sol la do* ré*", "G3_3", "ré"),
    ("jue diaoshi", "mi sol la do* ré* mi*", "G3_8", "mi"),
    ("zhi diaoshi", "sol la do* ré* mi* sol*", "G3_2", "sol"),
    ("yu diaoshi", "la do* ré* mi* sol* la*", "G3_6", "la"),
]


def ascending_pitches(notes: tuple[int, ...], start_octave: int = 0) -> list[Pitch]:
    """Place fifth indices in the lowest octaves that keep them increasing,
    then close on the octave of the first note."""
    out = [Pitch(notes[0], start_octave)]
    for k in notes[1:]:
        pt = Pitch(k, out[-1].octave)
        while compare(pt.ratio, out[-1].ratio) <= 0:
            pt = pt.shift_octaves(1)
        out.append(pt)
    out.append(out[0].shift_octaves(1))
    return out


@lru_cache(maxsize=None)
def _build() -> tuple[CatalogEntry, ...]:
    entries: list[CatalogEntry] = []
    by_label: dict[str, Scale] = {}
    for label, k, notes, names in _ON_DO:
        sc = scale_from_pitches(ascending_pitches(notes), k)
        entries.append(CatalogEntry(label, sc, names))
        by_label[label] = sc
    for label, written, source, tonic in _TRANSPOSED:
        pitches = [parse_pitch(w) for w in written.split()]
        sc = scale_from_pitches(pitches, by_label[source].family_k)
        if not scale_equal(sc, transpose(by_label[source], parse_pitch(tonic))):
            raise AssertionError(f"catalog entry {label} is not {source}({tonic})")
        entries.append(CatalogEntry(label, sc, (f"{source}({tonic})",)))
    if len({e.label for e in entries}) != len(entries):
        raise AssertionError("duplicate catalog label")
    return tuple(entries)


def named_catalog() -> list[CatalogEntry]:
    return list(_build())


def catalog_entry(label: str) -> CatalogEntry:
    for e in _build():
        if e.label.lower() == label.strip().lower():
            return e
    raise KeyError(f"no catalog entry {label!r}")
