"""Command-line interface: reports on the triad groups, graphs, and analyses.

Every verb writes a deterministic report to standard output; ``--json``
switches to a machine-readable form.  Verbs that verify something exit
nonzero when a check fails.  The analysis verbs can additionally render a
figure to a file with ``--figure PATH``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .analysis import (
    analysis_to_dict,
    analyze,
    beethoven_sequence,
    format_analysis,
    format_parsimony,
    load_progression,
    parsimony_study,
    parsimony_to_dict,
)
from .duality import verify_duality, verify_hook
from .graphs import build_chickenwire, build_tonnetz, export_dot, export_json
from .transforms import PlrWord, find_plr, find_ti, normal_form_alias, word_apply
from .triads import ChordParseError, parse_name, triad_table


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tonnetz",
        description="dihedral group actions on consonant triads",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("table", help="print the 24 consonant triads")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("apply", help="apply a P/L/R word to a chord")
    p.add_argument("--word", required=True,
                   help="word over P, L, R; rightmost letter acts first")
    p.add_argument("--chord", required=True,
                   help="chord name like C, f#, Ab or a literal <p,q,r>")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", metavar="PATH",
                   help="also draw the chords on the pitch-class clock")

    p = sub.add_parser("find", help="name both transformations between two chords")
    p.add_argument("--from", dest="source", required=True, metavar="CHORD")
    p.add_argument("--to", dest="target", required=True, metavar="CHORD")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("duality", help="verify the two actions centralize each other")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("hook", help="verify the uniform-transformation facts")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("graph", help="export a graph")
    p.add_argument("--which", choices=("tonnetz", "chickenwire"), required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("analyze", help="analyze a progression file")
    p.add_argument("file", help="text file of chord tokens; # lines are comments")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", metavar="PATH",
                   help="also render a root-motion chart")

    p = sub.add_parser("beethoven", help="the alternating R, L cycle through all triads")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("parsimony", help="rank trichords by voice-leading economy")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", metavar="PATH",
                   help="also render the ranking as a chart")

    return parser


def _cmd_table(args: argparse.Namespace) -> int:
    triads = triad_table()
    if args.json:
        payload = {
            "triads": [
                {
                    "index": t.index,
                    "name": t.name(),
                    "verbose": t.name(verbose=True),
                    "tones": [int(x) for x in t.tones],
                    "parity": t.parity,
                    "root": int(t.root),
                }
                for t in triads
            ]
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
        return 0
    rows = [("index", "major", "tones", "index", "minor", "tones")]
    for n in range(12):
        big, small = triads[n], triads[12 + n]
        rows.append(
            (str(big.index), big.name(verbose=True), big.literal(),
             str(small.index), small.name(verbose=True), small.literal())
        )
    widths = [max(len(r[c]) for r in rows) for c in range(6)]
    for row in rows:
        left = "  ".join(cell.rjust(w) if i in (0, 3) else cell.ljust(w)
                         for i, (cell, w) in enumerate(zip(row, widths)))
        print(left.rstrip())
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    word = PlrWord.from_string(args.word)
    start = parse_name(args.chord)
    result = word_apply(word, start)
    if args.figure:
        from .figures import save_triad_clock

        letters = tuple(args.word) if len(word) == 1 else ()
        save_triad_clock(start, args.figure, transformed=result,
                         axis_letters=letters)
    if args.json:
        payload = {
            "word": str(word),
            "start": start.name(),
            "result": result.name(),
            "tones": [int(x) for x in result.tones],
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"{result.name()} {result.literal()}")
    return 0


def _cmd_find(args: argparse.Namespace) -> int:
    source = parse_name(args.source)
    target = parse_name(args.target)
    ti = find_ti(source, target)
    plr = find_plr(source, target)
    alias = normal_form_alias(plr)
    if args.json:
        payload = {
            "from": source.name(),
            "to": target.name(),
            "ti": str(ti),
            "plr": str(plr),
            "plr_k": plr.k,
            "plr_e": plr.e,
            "plr_alias": alias,
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        plr_text = str(plr)
        if alias and alias != "identity":
            plr_text = f"{plr_text} (= {alias})"
        print(f"T/I: {ti}   PLR: {plr_text}")
    return 0


def _cmd_duality(args: argparse.Namespace) -> int:
    report = verify_duality()
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        print(report.render())
    if not report.passed:
        first = next(label for label, ok in report.checks() if not ok)
        print(f"FAILED: {first}", file=sys.stderr)
        return 1
    return 0


def _cmd_hook(args: argparse.Namespace) -> int:
    report = verify_hook()
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        print(report.render())
    if not report.passed:
        first = next(label for label, ok in report.checks() if not ok)
        print(f"FAILED: {first}", file=sys.stderr)
        return 1
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    graph = build_tonnetz() if args.which == "tonnetz" else build_chickenwire()
    text = export_dot(graph) if args.format == "dot" else export_json(graph)
    print(text)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    progression = load_progression(args.file)
    steps = analyze(progression)
    if args.figure:
        from .figures import save_progression_chart

        save_progression_chart(progression, steps, args.figure)
    if args.json:
        print(json.dumps(analysis_to_dict(steps), sort_keys=True, indent=2))
    else:
        print(format_analysis(steps))
    return 0


def _cmd_beethoven(args: argparse.Namespace) -> int:
    progression = beethoven_sequence()
    labels = ["R" if i % 2 == 0 else "L" for i in range(len(progression) - 1)]
    if args.json:
        payload = {"sequence": list(progression.names()), "steps": labels}
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(" ".join(progression.names()))
        print("steps: " + " ".join(labels))
    return 0


def _cmd_parsimony(args: argparse.Namespace) -> int:
    rows = parsimony_study()
    if args.figure:
        from .figures import save_parsimony_chart

        save_parsimony_chart(rows, args.figure)
    if args.json:
        print(json.dumps(parsimony_to_dict(rows), sort_keys=True, indent=2))
    else:
        print(format_parsimony(rows))
    return 0


_COMMANDS = {
    "table": _cmd_table,
    "apply": _cmd_apply,
    "find": _cmd_find,
    "duality": _cmd_duality,
    "hook": _cmd_hook,
    "graph": _cmd_graph,
    "analyze": _cmd_analyze,
    "beethoven": _cmd_beethoven,
    "parsimony": _cmd_parsimony,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.verb](args)
    except (ChordParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
