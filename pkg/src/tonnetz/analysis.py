"""Chord-progression analysis and voice-leading parsimony.

A progression file is plain text: chord tokens separated by whitespace or
newlines, with ``#``-prefixed lines as comments.  Analysis names, for each
consecutive pair, the unique transposition-or-inversion and the unique
PLR-group element connecting them — two different bijections that happen
to agree on that one chord pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .pitchspace import TIElement, circle_distance, invert
from .transforms import (
    DihedralNormalForm,
    PlrWord,
    find_plr,
    find_ti,
    normal_form_alias,
    relative,
    leading_tone_exchange,
    ti_on_triad,
    word_apply,
)
from .triads import ChordParseError, ConsonantTriad, TRIADS, parse_name


@dataclass(frozen=True)
class Progression:
    """A non-empty sequence of consonant triads, optionally labeled."""

    triads: tuple[ConsonantTriad, ...]
    source: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.triads:
            raise ValueError("a progression needs at least one chord")

    def __len__(self) -> int:
        return len(self.triads)

    def names(self) -> tuple[str, ...]:
        return tuple(t.name() for t in self.triads)

    def __str__(self) -> str:
        return " ".join(self.names())


def parse_progression(text: str, source: Optional[str] = None) -> Progression:
    """Parse whitespace-separated chord tokens; ``#`` lines are comments."""
    triads = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        column = 1
        for token in line.split():
            column = line.index(token, column - 1) + 1
            triads.append(parse_name(token, line=line_no, column=column))
            column += len(token)
    if not triads:
        raise ChordParseError("progression contains no chords", token="", line=None)
    return Progression(tuple(triads), source=source)


def load_progression(path: str | Path) -> Progression:
    p = Path(path)
    return parse_progression(p.read_text(encoding="utf-8"), source=p.stem)


def fixture_path(name: str) -> Path:
    """Path of a bundled example progression (e.g. ``"pachelbel_canon"``)."""
    base = resources.files("tonnetz").joinpath("data")
    candidate = base.joinpath(f"{name}.txt")
    if not candidate.is_file():
        available = ", ".join(sorted(f.stem for f in list_fixtures()))
        raise FileNotFoundError(f"no bundled progression {name!r}; have: {available}")
    return Path(str(candidate))


def list_fixtures() -> tuple[Path, ...]:
    base = resources.files("tonnetz").joinpath("data")
    return tuple(sorted(Path(str(p)) for p in base.iterdir() if p.name.endswith(".txt")))


@dataclass(frozen=True)
class TransformationStep:
    """One progression step with both of its dihedral descriptions."""

    start: ConsonantTriad
    end: ConsonantTriad
    ti: TIElement
    plr: DihedralNormalForm

    def to_dict(self) -> dict:
        return {
            "from": self.start.name(),
            "to": self.end.name(),
            "ti": str(self.ti),
            "plr": str(self.plr),
        }


def analyze(progression: Progression) -> list[TransformationStep]:
    """Describe every consecutive chord pair in both group actions."""
    if len(progression) < 2:
        raise ValueError("analysis needs at least two chords")
    steps = []
    for start, end in zip(progression.triads, progression.triads[1:]):
        steps.append(
            TransformationStep(
                start=start,
                end=end,
                ti=find_ti(start, end),
                plr=find_plr(start, end),
            )
        )
    return steps


def format_analysis(steps: list[TransformationStep]) -> str:
    """Aligned text table of analysis steps."""
    rows = [("step", "from", "to", "T/I", "PLR")]
    for i, s in enumerate(steps, start=1):
        plr = str(s.plr)
        alias = normal_form_alias(s.plr)
        if alias and alias != "identity":
            plr = f"{plr} (= {alias})"
        rows.append((str(i), s.start.name(), s.end.name(), str(s.ti), plr))
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows]
    return "\n".join(lines)


def analysis_to_dict(steps: list[TransformationStep]) -> dict:
    return {"steps": [s.to_dict() for s in steps]}


@dataclass(frozen=True)
class SquareReport:
    """A commuting-square check: one action horizontal, the other vertical."""

    top_left: ConsonantTriad
    top_right: ConsonantTriad
    bottom_left: ConsonantTriad
    bottom_right: ConsonantTriad
    horizontal: TIElement
    vertical: PlrWord
    commutes: bool

    def corners(self) -> tuple[str, str, str, str]:
        return (
            self.top_left.name(),
            self.top_right.name(),
            self.bottom_left.name(),
            self.bottom_right.name(),
        )

    def render(self) -> str:
        tl, tr, bl, br = self.corners()
        return "\n".join(
            [
                f"{tl} --{self.horizontal}--> {tr}",
                f"{bl} --{self.horizontal}--> {br}   (vertical: {self.vertical})",
                f"commutes: {self.commutes}",
            ]
        )


def verify_square(top_left: ConsonantTriad, horizontal: TIElement,
                  vertical: PlrWord) -> SquareReport:
    """Fill in the square from one corner and report whether it commutes."""
    top_right = ti_on_triad(horizontal, top_left)
    bottom_left = word_apply(vertical, top_left)
    via_down_then_right = ti_on_triad(horizontal, bottom_left)
    via_right_then_down = word_apply(vertical, top_right)
    return SquareReport(
        top_left=top_left,
        top_right=top_right,
        bottom_left=bottom_left,
        bottom_right=via_down_then_right,
        horizontal=horizontal,
        vertical=vertical,
        commutes=via_down_then_right == via_right_then_down,
    )


def beethoven_sequence() -> Progression:
    """The alternating R, L walk from C major: 24 steps through every triad."""
    current = TRIADS[0]
    chords = [current]
    for step in range(24):
        current = relative(current) if step % 2 == 0 else leading_tone_exchange(current)
        chords.append(current)
    return Progression(tuple(chords), source="beethoven_ninth")


@dataclass(frozen=True)
class DualMotionReport:
    """Root motion of the composite LR on each triad parity."""

    major_shift: int          # semitones up, applied to every major triad
    minor_shift: int          # semitones up, applied to every minor triad
    uniform_over_majors: bool
    uniform_over_minors: bool
    example_major: tuple[str, str]
    example_minor: tuple[str, str]

    @property
    def passed(self) -> bool:
        return (
            self.uniform_over_majors
            and self.uniform_over_minors
            and self.major_shift == 5
            and self.minor_shift == 7  # -5 mod 12
        )

    def render(self) -> str:
        up, down = self.major_shift, (12 - self.minor_shift) % 12
        ma, mb = self.example_major
        na, nb = self.example_minor
        return "\n".join(
            [
                f"LR moves every major-triad root up {up} (e.g. {ma} -> {mb})",
                f"LR moves every minor-triad root down {down} (e.g. {na} -> {nb})",
                f"uniform over parities: {self.uniform_over_majors and self.uniform_over_minors}",
            ]
        )


def ives_dual_motion_report() -> DualMotionReport:
    """Check LR shifts major roots by +5 and minor roots by -5 (mod 12).

    This is the dualism the Ives square turns on: the same operation that
    lifts every major triad a fourth drops every minor triad by the same
    interval.
    """
    lr = PlrWord.from_string("LR")
    major_shifts = set()
    minor_shifts = set()
    for triad in TRIADS:
        image = word_apply(lr, triad)
        shift = triad.root.interval_to(image.root)
        (major_shifts if triad.is_major else minor_shifts).add(shift)
    d_major = TRIADS[2]
    a_minor = TRIADS[12 + 4]  # minor with root 9 has inversion index 4
    return DualMotionReport(
        major_shift=next(iter(major_shifts)) if len(major_shifts) == 1 else -1,
        minor_shift=next(iter(minor_shifts)) if len(minor_shifts) == 1 else -1,
        uniform_over_majors=len(major_shifts) == 1,
        uniform_over_minors=len(minor_shifts) == 1,
        example_major=(d_major.name(), word_apply(lr, d_major).name()),
        example_minor=(a_minor.name(), word_apply(lr, a_minor).name()),
    )


# ---------------------------------------------------------------------------
# Parsimony of the contextual inversions across all three-note chords.
# ---------------------------------------------------------------------------

Trichord = tuple[int, int, int]


def contextual_displacements(chord: Trichord) -> tuple[int, int, int]:
    """Clock distance moved by the one moving voice under each inversion.

    The P-, L-, and R-style inversions of ``<0, a, b>`` each hold two
    tones fixed (as a pair) and send the remaining tone across the axis;
    the three numbers are the distances traveled by that moving tone.
    """
    y1, y2, y3 = chord
    d_p = circle_distance(y2, int(invert(y1 + y3, y2)))
    d_l = circle_distance(y1, int(invert(y2 + y3, y1)))
    d_r = circle_distance(y3, int(invert(y1 + y2, y3)))
    return (d_p, d_l, d_r)


@dataclass(frozen=True)
class TrichordEvaluation:
    """One ordered representative with its three voice displacements."""

    chord: Trichord
    displacements: tuple[int, int, int]


@dataclass(frozen=True)
class ParsimonyRow:
    """A transposition/inversion class of trichords, with merged statistics."""

    class_rep: Trichord
    displacements: tuple[int, int, int]
    max_disp: int
    sum_disp: int
    excluded: bool
    members: tuple[TrichordEvaluation, ...]

    def member(self, chord: Trichord) -> Optional[TrichordEvaluation]:
        for m in self.members:
            if m.chord == chord:
                return m
        return None


def _trichord_class(chord: Trichord) -> frozenset[frozenset[int]]:
    """The full set of transposed/inverted forms of a chord's tone set."""
    tones = frozenset(chord)
    forms = set()
    for n in range(12):
        forms.add(frozenset((t + n) % 12 for t in tones))
        forms.add(frozenset((n - t) % 12 for t in tones))
    return frozenset(forms)


def parsimony_study() -> list[ParsimonyRow]:
    """Rank all trichord classes by worst-voice movement under P/L/R analogues.

    Representatives are the ordered chords <0, a, b> with 0 < a < b <= 11
    and distinct tones; representatives related by transposition or
    inversion are merged into one row, taking the minimum of each
    statistic (for these inversions the statistics agree across a class,
    so the minimum is a formality).  Rows whose three inversions all fix
    the chord (the augmented triad) are flagged excluded and listed last;
    the rest are sorted by (max displacement, total displacement).
    """
    evaluated: dict[Trichord, TrichordEvaluation] = {}
    for a in range(1, 12):
        for b in range(a + 1, 12):
            chord = (0, a, b)
            evaluated[chord] = TrichordEvaluation(chord, contextual_displacements(chord))

    class_members: dict[frozenset[frozenset[int]], list[TrichordEvaluation]] = {}
    for chord, ev in evaluated.items():
        key = _trichord_class(chord)
        class_members.setdefault(key, []).append(ev)

    rows = []
    for members in class_members.values():
        members.sort(key=lambda m: m.chord)
        rep = members[0]
        max_disp = min(max(m.displacements) for m in members)
        sum_disp = min(sum(m.displacements) for m in members)
        excluded = all(d == 0 for m in members for d in m.displacements)
        rows.append(
            ParsimonyRow(
                class_rep=rep.chord,
                displacements=rep.displacements,
                max_disp=max_disp,
                sum_disp=sum_disp,
                excluded=excluded,
                members=tuple(members),
            )
        )
    ranked = sorted(
        (r for r in rows if not r.excluded),
        key=lambda r: (r.max_disp, r.sum_disp, r.class_rep),
    )
    flagged = sorted((r for r in rows if r.excluded), key=lambda r: r.class_rep)
    return ranked + flagged


def find_parsimony_row(rows: list[ParsimonyRow], chord: Trichord) -> ParsimonyRow:
    """The row whose class contains the given ordered representative."""
    for row in rows:
        if row.member(chord) is not None:
            return row
    raise ValueError(f"no parsimony row contains {chord}")


def format_parsimony(rows: list[ParsimonyRow]) -> str:
    """Aligned text table, one line per trichord class."""
    header = ("class", "P", "L", "R", "max", "sum", "note")
    body = []
    for row in rows:
        p, l, r = row.displacements
        note = "excluded (all voices fixed)" if row.excluded else ""
        rep = "<{},{},{}>".format(*row.class_rep)
        body.append((rep, str(p), str(l), str(r), str(row.max_disp),
                     str(row.sum_disp), note))
    rows_text = [header] + body
    widths = [max(len(r[c]) for r in rows_text) for c in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows_text]
    return "\n".join(lines)


def parsimony_to_dict(rows: list[ParsimonyRow]) -> dict:
    return {
        "rows": [
            {
                "class": list(row.class_rep),
                "displacements": list(row.displacements),
                "max": row.max_disp,
                "sum": row.sum_disp,
                "excluded": row.excluded,
                "members": [list(m.chord) for m in row.members],
            }
            for row in rows
        ]
    }
