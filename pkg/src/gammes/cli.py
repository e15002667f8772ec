"""Command-line front end.

Exit status: 0 on success, 1 on a usage error, 2 when a verification check
fails.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import __version__
from .catalog import catalog_entry, named_catalog
from .families import families, family_xi_indices
from .formats import (
    OutputFormat,
    export_json,
    export_scl,
    family_payload,
    note_sequence,
    ratio_payload,
    render_csv,
    render_table,
    scale_payload,
)
from .modes import classify_type, count_types, mode_scale, modes_of, type_by_label, types_of
from .naming import format_note, format_pitch, parse_pitch, sort_by_pitch
from .pitch import Pitch, PitchRatio, cents, decimal, format_ratio, xi
from .scales import Scale, ScaleStructure, build_scale, enumerate_structures, transpose
from .verification import run_all

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
FAMILY_TABLE_LIMIT = 30


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Result:
    header: list[str] = field(default_factory=list)
    rows: list[list[Any]] = field(default_factory=list)
    payload: Any = None
    text: str | None = None  # replaces the table in text format
    scale: Scale | None = None
    label: str = "scale"
    exit_code: int = EXIT_OK


def _ratio_text(r: PitchRatio, ascii: bool) -> str:
    return format_ratio(r, unicode=not ascii)


def _tonality(text: str) -> Pitch:
    try:
        return parse_pitch(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _type_ids(k: int, force: bool) -> dict[ScaleStructure, str]:
    return {t.canonical: f"t{j}" for j, t in enumerate(types_of(k, force=force), 1)}


def _scale_rows(sc: Scale, ascii: bool) -> list[list[Any]]:
    rows = []
    for j, p in enumerate(sc.pitches):
        r = p.ratio
        rows.append([j, format_pitch(p, ascii), _ratio_text(r, ascii), decimal(r), cents(r)])
    return rows


def _scale_result(sc: Scale, label: str, description: str, ascii: bool) -> Result:
    title = f"{label}: family {sc.family_k}, word {sc.structure.word}\n"
    header = ["degree", "note", "ratio", "decimal", "cents"]
    rows = _scale_rows(sc, ascii)
    return Result(
        header,
        rows,
        scale_payload(sc, label, ascii),
        title + render_table(header, rows),
        sc,
        label,
    )


# -- commands ---------------------------------------------------------------


def cmd_notes(args: argparse.Namespace) -> Result:
    if args.k_from > args.k_to:
        raise UsageError("--from must not exceed --to")
    ks = (
        sort_by_pitch(args.k_from, args.k_to)
        if args.sort == "pitch"
        else list(range(args.k_from, args.k_to + 1))
    )
    header = ["k", "name", "ratio", "decimal", "cents"]
    rows, payload = [], []
    for k in ks:
        r = xi(k)
        rows.append([k, format_note(k, args.ascii), _ratio_text(r, args.ascii), decimal(r), cents(r)])
        payload.append({"k": k, "name": format_note(k, args.ascii), **ratio_payload(r)})
    return Result(header, rows, payload)


def cmd_families(args: argparse.Namespace) -> Result:
    if not 1 <= args.k_max <= FAMILY_TABLE_LIMIT:
        raise UsageError(f"--k-max must be in 1..{FAMILY_TABLE_LIMIT}")
    header = ["k", "p", "T", "D", "theta", "theta_dec", "theta_xi", "delta", "delta_dec", "delta_xi", "N"]
    rows = []
    fs = families(args.k_max)
    for f in fs:
        a, b = family_xi_indices(f)
        rows.append([
            f.k, f.p, f.tones, f.semitones,
            _ratio_text(f.theta, args.ascii), decimal(f.theta), a,
            _ratio_text(f.delta, args.ascii), decimal(f.delta), b,
            f.n_scales,
        ])
    return Result(header, rows, [family_payload(f) for f in fs])


def _enumeration_guard(k: int, force: bool):
    try:
        return list(enumerate_structures(k, force=force))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args: argparse.Namespace) -> Result:
    tonality = _tonality(args.tonality)
    structures = _enumeration_guard(args.family, args.force)
    ids = _type_ids(args.family, args.force)
    header = ["index", "word", "notes", "type"]
    rows, payload = [], []
    for j, s in enumerate(structures, 1):
        sc = build_scale(s, tonality)
        tid = ids[classify_type(s).canonical]
        rows.append([j, s.word, note_sequence(sc, args.ascii), tid])
        payload.append({"index": j, "type": tid, **scale_payload(sc, None, args.ascii)})
    return Result(header, rows, payload)


def cmd_types(args: argparse.Namespace) -> Result:
    _enumeration_guard(args.family, args.force)
    header = ["id", "label", "canonical", "representative", "offset"]
    rows, payload = [], []
    for j, t in enumerate(types_of(args.family, force=args.force), 1):
        row = [f"t{j}", t.reference_label or "-", t.canonical.word, t.fundamental.word, t.offset]
        rows.append(row)
        payload.append(dict(zip(header, row)))
    text = f"family {args.family}: {count_types(args.family)} types\n" + render_table(header, rows)
    return Result(header, rows, {"family": args.family, "count": count_types(args.family), "types": payload}, text)


def cmd_modes(args: argparse.Namespace) -> Result:
    tonality = _tonality(args.tonality)
    _enumeration_guard(args.family, args.force)
    try:
        t = type_by_label(args.family, args.type, force=args.force)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    header = ["rotation", "mode_note", "name", "notes"]
    rows, payload = [], []
    for m in modes_of(t):
        sc = mode_scale(t, m.rotation_index, tonality)
        note = format_note(m.mode_note, args.ascii)
        name = m.display_name(args.ascii)
        rows.append([m.rotation_index, note, name, note_sequence(sc, args.ascii)])
        payload.append({
            "rotation": m.rotation_index,
            "mode_note": m.mode_note,
            "name": name,
            **scale_payload(sc, None, args.ascii),
        })
    return Result(header, rows, payload)


def _resolve_scale(args: argparse.Namespace) -> tuple[Scale, str, str]:
    """Scale named by a catalog label or by ``--family``/``--word``."""
    if args.label:
        try:
            entry = catalog_entry(args.label)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        sc, label = entry.scale, entry.label
        desc = ", ".join(entry.names) or label
    elif args.family is not None and args.word:
        try:
            s = ScaleStructure.from_word(args.family, args.word)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        sc, label = build_scale(s, Pitch(0)), f"family{args.family}_{s.word}"
        desc = f"family {args.family} structure {s.word}"
    else:
        raise UsageError("give a catalog label or both --family and --word")
    if args.tonality:
        sc = transpose(sc, _tonality(args.tonality))
        label = f"{label}_{format_pitch(sc.tonality, True)}"
    return sc, label, desc


def cmd_scale(args: argparse.Namespace) -> Result:
    if args.list:
        header = ["label", "family", "word", "notes", "names"]
        rows = [
            [e.label, e.scale.family_k, e.scale.structure.word, note_sequence(e.scale, args.ascii), "; ".join(e.names)]
            for e in named_catalog()
        ]
        return Result(header, rows, [dict(zip(header, r)) for r in rows])
    sc, label, desc = _resolve_scale(args)
    return _scale_result(sc, label, desc, args.ascii)


def cmd_transpose(args: argparse.Namespace) -> Result:
    sc, label, desc = _resolve_scale(args)
    return _scale_result(sc, label, desc, args.ascii)


def cmd_export(args: argparse.Namespace) -> Result:
    sc, label, desc = _resolve_scale(args)
    res = _scale_result(sc, label, desc, args.ascii)
    res.payload = {**res.payload, "description": desc}
    return res


def cmd_verify(args: argparse.Namespace) -> Result:
    if args.k_max < 1:
        raise UsageError("--k-max must be >= 1")
    reports = run_all(args.k_max)
    props = [r for r in reports if r.check_name != "table_errata"]
    ok = all(r.passed for r in props)
    lines = []
    for r in reports:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.check_name} ({r.range[0]}..{r.range[1]})")
        lines += [f"    {w}" for w in r.witnesses]
    header = ["check", "passed", "witness"]
    rows = [[r.check_name, r.passed, w] for r in reports for w in r.witnesses]
    return Result(
        header,
        rows,
        {"passed": ok, "reports": [r.as_dict() for r in reports]},
        "\n".join(lines) + "\n",
        exit_code=EXIT_OK if ok else EXIT_VERIFY,
    )


# -- parser -----------------------------------------------------------------


def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default=d,
                   help="text (default), json, csv or scl; export defaults to scl")
    p.add_argument("--out", metavar="PATH", default=d if suppress else None, help="write to PATH instead of stdout")
    p.add_argument("--ascii", action="store_true", default=d if suppress else False, help="write # and b for alterations")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gammes", description="Pythagorean notes and tone-breaking scale families.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("notes", parents=[common], help="table of notes on the line of fifths")
    p.add_argument("--from", dest="k_from", type=int, default=-15)
    p.add_argument("--to", dest="k_to", type=int, default=19)
    p.add_argument("--sort", choices=["index", "pitch"], default="index")
    p.set_defaults(func=cmd_notes)

    p = sub.add_parser("families", parents=[common], help="family recursion table")
    p.add_argument("--k-max", type=int, default=10)
    p.set_defaults(func=cmd_families)

    def family_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("family", type=int)
        p.add_argument("--force", action="store_true", help="allow families above the enumeration limit")

    p = sub.add_parser("enumerate", parents=[common], help="every scale of a family")
    family_arg(p)
    p.add_argument("--tonality", default="do")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("types", parents=[common], help="rotation classes of a family")
    family_arg(p)
    p.set_defaults(func=cmd_types)

    p = sub.add_parser("modes", parents=[common], help="modes of one type")
    family_arg(p)
    p.add_argument("type", help="t<j> or a reference label such as τ⁴₃")
    p.add_argument("--tonality", default="do")
    p.set_defaults(func=cmd_modes)

    def scale_args(p: argparse.ArgumentParser, tonality_positional: bool = False) -> None:
        p.add_argument("label", nargs="?", help="catalog label, e.g. G4_15 or H3")
        if tonality_positional:
            p.add_argument("tonality")
        else:
            p.add_argument("--tonality")
        p.add_argument("--family", type=int)
        p.add_argument("--word", help="step word such as TTSTTTS")

    p = sub.add_parser("scale", parents=[common], help="show a catalog scale or a structure")
    scale_args(p)
    p.add_argument("--list", action="store_true", help="list the named catalog")
    p.set_defaults(func=cmd_scale)

    p = sub.add_parser("transpose", parents=[common], help="realize a scale on another tonality")
    scale_args(p, tonality_positional=True)
    p.set_defaults(func=cmd_transpose, list=False)

    p = sub.add_parser("export", parents=[common], help="write a scale as a tuning file (default .scl)")
    scale_args(p)
    p.set_defaults(func=cmd_export, list=False)

    p = sub.add_parser("verify", parents=[common], help="run the structural checks")
    p.add_argument("--k-max", type=int, default=20)
    p.set_defaults(func=cmd_verify)
    return parser


def render(res: Result, fmt: str) -> str:
    if fmt == OutputFormat.JSON:
        return export_json(res.payload)
    if fmt == OutputFormat.CSV:
        return render_csv(res.header, res.rows)
    if fmt == OutputFormat.SCL:
        if res.scale is None:
            raise UsageError("scl output needs a single scale")
        desc = res.payload.get("description") if isinstance(res.payload, dict) else None
        return export_scl(res.scale, desc or res.label, res.label)
    return res.text if res.text is not None else render_table(res.header, res.rows)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or (OutputFormat.SCL.value if args.func is cmd_export else OutputFormat.TEXT.value)
    try:
        res = args.func(args)
        out = render(res, fmt)
    except UsageError as exc:
        print(f"gammes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
