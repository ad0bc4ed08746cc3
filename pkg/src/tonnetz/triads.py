"""The 24 consonant triads as ordered pitch-class triples.

A major triad is written root first, ``<r, r+4, r+7>``; a minor triad is
the pointwise inversion of a major one and comes out as ``<n, n+8, n+5>``,
whose *third* entry is the root.  Keeping triads ordered this way makes
every transposition, inversion, and contextual inversion land exactly on
another canonical triple, so triad equality is plain tuple equality.

Canonical indexing: indices 0..11 are the major triads transposed from
C = <0,4,7> (index = root), indices 12..23 are the minor triads obtained
by the inversions of C (index 12 = <0,8,5> = f minor).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .pitchspace import FLAT_NAMES, PITCH_NAMES, PitchClass, TIElement

MAJOR = "major"
MINOR = "minor"

#: Interval stamps (second and third tone relative to the first).
_MAJOR_SHAPE = (4, 7)
_MINOR_SHAPE = (8, 5)

_LETTER_TO_PC = {"C": 0, "D": 2, "E": 4, "F": 5, "G": 7, "A": 9, "B": 11}
_NAME_RE = re.compile(r"^([A-Ga-g])([#b]?)$")
_LITERAL_RE = re.compile(r"^<\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*>$")


class ChordParseError(ValueError):
    """A chord token that does not name a consonant triad."""

    def __init__(self, message: str, token: str, line: Optional[int] = None,
                 column: Optional[int] = None):
        self.token = token
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(f"{message}{where}")


@dataclass(frozen=True, order=True)
class ConsonantTriad:
    """An ordered triple of pitch classes forming a major or minor triad."""

    tones: tuple[PitchClass, PitchClass, PitchClass]

    def __post_init__(self) -> None:
        if len(self.tones) != 3:
            raise ValueError(f"expected three tones, got {len(self.tones)}")
        tones = tuple(PitchClass(int(t)) for t in self.tones)
        object.__setattr__(self, "tones", tones)
        if self._shape() not in (_MAJOR_SHAPE, _MINOR_SHAPE):
            literal = ",".join(str(int(t)) for t in tones)
            raise ValueError(
                f"<{literal}> is not a consonant triad: successive intervals "
                f"from the first tone must be {_MAJOR_SHAPE} (major) or "
                f"{_MINOR_SHAPE} (minor)"
            )

    def _shape(self) -> tuple[int, int]:
        y1, y2, y3 = self.tones
        return (y1.interval_to(y2), y1.interval_to(y3))

    @classmethod
    def from_tones(cls, y1: int, y2: int, y3: int) -> "ConsonantTriad":
        return cls((PitchClass(y1), PitchClass(y2), PitchClass(y3)))

    @classmethod
    def from_index(cls, index: int) -> "ConsonantTriad":
        """The triad at a canonical index 0..23."""
        if not 0 <= index < 24:
            raise ValueError(f"triad index out of range: {index}")
        return TRIADS[index]

    @property
    def parity(self) -> str:
        return MAJOR if self._shape() == _MAJOR_SHAPE else MINOR

    @property
    def is_major(self) -> bool:
        return self.parity == MAJOR

    @property
    def root(self) -> PitchClass:
        """Root tone: first entry of a major triple, third of a minor one."""
        return self.tones[0] if self.is_major else self.tones[2]

    @property
    def index(self) -> int:
        """Canonical index: majors 0..11 by root, minors 12..23 by inversion."""
        return int(self.tones[0]) + (0 if self.is_major else 12)

    @property
    def pitch_class_set(self) -> frozenset[PitchClass]:
        return frozenset(self.tones)

    def name(self, verbose: bool = False) -> str:
        return format_name(self, verbose=verbose)

    def literal(self) -> str:
        return "<{},{},{}>".format(*(int(t) for t in self.tones))

    def __str__(self) -> str:
        return self.name()


def _apply_ti_to_tones(g: TIElement, tones: Iterable[PitchClass]) -> "ConsonantTriad":
    return ConsonantTriad(tuple(g.apply(t) for t in tones))


def _build_table() -> tuple[ConsonantTriad, ...]:
    c_major = ConsonantTriad.from_tones(0, 4, 7)
    majors = [_apply_ti_to_tones(TIElement("T", n), c_major.tones) for n in range(12)]
    minors = [_apply_ti_to_tones(TIElement("I", n), c_major.tones) for n in range(12)]
    return tuple(majors + minors)


#: The canonical table of all 24 consonant triads.
TRIADS = _build_table()

_TRIAD_BY_SET = {t.pitch_class_set: t for t in TRIADS}


def triad_table() -> tuple[ConsonantTriad, ...]:
    """All 24 consonant triads in canonical index order."""
    return TRIADS


def triad_with_pitch_classes(pcs: Iterable[int]) -> ConsonantTriad:
    """The unique consonant triad whose unordered tone set matches, if any."""
    key = frozenset(PitchClass(int(p)) for p in pcs)
    try:
        return _TRIAD_BY_SET[key]
    except KeyError:
        raise ValueError(f"no consonant triad has pitch classes {sorted(int(p) for p in key)}")


@dataclass(frozen=True)
class TriadName:
    """A letter-named triad: letter A-G, optional accidental, and parity."""

    letter: str
    accidental: str  # "natural", "sharp", or "flat"
    parity: str

    def __post_init__(self) -> None:
        if self.letter not in _LETTER_TO_PC:
            raise ValueError(f"letter must be A..G, got {self.letter!r}")
        if self.accidental not in ("natural", "sharp", "flat"):
            raise ValueError(f"unknown accidental {self.accidental!r}")
        if self.parity not in (MAJOR, MINOR):
            raise ValueError(f"unknown parity {self.parity!r}")

    @property
    def root(self) -> PitchClass:
        shift = {"natural": 0, "sharp": 1, "flat": -1}[self.accidental]
        return PitchClass(_LETTER_TO_PC[self.letter] + shift)

    def to_triad(self) -> ConsonantTriad:
        root = int(self.root)
        if self.parity == MAJOR:
            return TRIADS[root]
        # Minor triad with this root: canonical index 12 + (root + 7).
        return TRIADS[12 + (root + 7) % 12]

    def __str__(self) -> str:
        mark = {"natural": "", "sharp": "#", "flat": "b"}[self.accidental]
        text = self.letter + mark
        return text if self.parity == MAJOR else text.lower()


def parse_name(token: str, line: Optional[int] = None,
               column: Optional[int] = None) -> ConsonantTriad:
    """Parse a chord token: letter name (case gives parity) or a literal triple.

    ``"C"`` and ``"Ab"`` are major, ``"c"`` and ``"bb"`` minor; ``"<0,4,7>"``
    spells the tones directly and must satisfy the consonant-triad shape.
    """
    m = _NAME_RE.match(token)
    if m:
        letter, mark = m.groups()
        accidental = {"": "natural", "#": "sharp", "b": "flat"}[mark]
        parity = MAJOR if letter.isupper() else MINOR
        return TriadName(letter.upper(), accidental, parity).to_triad()
    m = _LITERAL_RE.match(token)
    if m:
        tones = tuple(int(v) for v in m.groups())
        try:
            return ConsonantTriad.from_tones(*tones)
        except ValueError as exc:
            raise ChordParseError(str(exc), token, line, column) from exc
    raise ChordParseError(f"cannot read chord token {token!r}", token, line, column)


def format_name(triad: ConsonantTriad, verbose: bool = False) -> str:
    """Letter name of a triad; majors upper-case, minors lower-case.

    Compact mode prefers sharps ("C#"); verbose mode shows both enharmonic
    spellings ("C#/Db") for the five black-key roots.
    """
    root = int(triad.root)
    text = PITCH_NAMES[root]
    if verbose and root in FLAT_NAMES:
        text = f"{text}/{FLAT_NAMES[root]}"
    return text if triad.is_major else text.lower()


def common_tones(a: ConsonantTriad, b: ConsonantTriad) -> frozenset[PitchClass]:
    """Pitch classes shared by two triads, ignoring order."""
    return a.pitch_class_set & b.pitch_class_set
