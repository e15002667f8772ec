"""Serialization: JSON payloads, CSV and text tables, Scala ``.scl`` files."""

from __future__ import annotations

import csv
import io
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence

from .families import Family, family_xi_indices
from .naming import format_note, format_pitch
from .pitch import Pitch, PitchRatio, cents, decimal
from .scales import Scale
from .verification import CheckReport

__all__ = [
    "OutputFormat",
    "ratio_payload",
    "pitch_payload",
    "scale_payload",
    "family_payload",
    "export_json",
    "render_csv",
    "render_table",
    "scl_ratio",
    "export_scl",
    "parse_scl",
    "note_sequence",
    "note_names",
]


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    SCL = "scl"


def ratio_payload(r: PitchRatio) -> dict[str, Any]:
    return {"pow3": r.pow3, "pow2": r.pow2, "decimal": decimal(r), "cents": cents(r)}


def pitch_payload(p: Pitch, ascii: bool = False) -> dict[str, Any]:
    return {
        "note": p.note,
        "octave": p.octave,
        "name": format_pitch(p, ascii),
        "ratio": ratio_payload(p.ratio),
    }


def scale_payload(sc: Scale, label: str | None = None, ascii: bool = False) -> dict[str, Any]:
    return {
        "label": label,
        "family": sc.family_k,
        "word": sc.structure.word,
        "tonality": pitch_payload(sc.tonality, ascii),
        "pitches": [pitch_payload(p, ascii) for p in sc.pitches],
    }


def family_payload(f: Family) -> dict[str, Any]:
    a, b = family_xi_indices(f)
    return {
        "k": f.k,
        "p": f.p,
        "T": f.tones,
        "D": f.semitones,
        "theta": {**ratio_payload(f.theta), "xi": a},
        "delta": {**ratio_payload(f.delta), "xi": b},
        "epsilon": f.epsilon,
        "N": f.n_scales,
    }


def _default(obj: Any) -> Any:
    if isinstance(obj, PitchRatio):
        return ratio_payload(obj)
    if isinstance(obj, Pitch):
        return pitch_payload(obj)
    if isinstance(obj, Scale):
        return scale_payload(obj)
    if isinstance(obj, Family):
        return family_payload(obj)
    if isinstance(obj, CheckReport):
        return obj.as_dict()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def export_json(payload: Any) -> str:
    """Compact, deterministic JSON (field order is construction order)."""
    return json.dumps(payload, default=_default, ensure_ascii=False, separators=(",", ":")) + "\n"


def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces."""
    cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def scl_ratio(r: PitchRatio) -> str:
    return f"{r.numerator}/{r.denominator}"


def export_scl(sc: Scale, description: str, label: str = "scale") -> str:
    """Scala tuning file; every degree is an exact ratio to the tonality."""
    base = sc.tonality.ratio
    lines = [f"! {label}.scl", description, str(len(sc.pitches) - 1)]
    lines += [scl_ratio(p.ratio / base) for p in sc.pitches[1:]]
    return "\n".join(lines) + "\n"


def parse_scl(text: str) -> tuple[str, list[Fraction]]:
    """Read a Scala file with ratio lines; returns ``(description, ratios)``.

    Cents lines (containing a dot) are rejected since they are not exact.
    """
    lines = [ln for ln in text.splitlines() if not ln.startswith("!")]
    if len(lines) < 2:
        raise ValueError("truncated .scl file")
    description = lines[0].strip()
    count = int(lines[1].split()[0])
    ratios = []
    for ln in lines[2 : 2 + count]:
        token = ln.split()[0]
        if "." in token:
            raise ValueError(f"cents value {token!r} is not an exact ratio")
        ratios.append(Fraction(token))
    if len(ratios) != count:
        raise ValueError(f"expected {count} pitch lines, found {len(ratios)}")
    return description, ratios


def note_sequence(sc: Scale, ascii: bool = False) -> str:
    return " ".join(format_pitch(p, ascii) for p in sc.pitches)


def note_names(notes: Sequence[int], ascii: bool = False) -> str:
    return " ".join(format_note(k, ascii) for k in notes)
