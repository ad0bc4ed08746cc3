"""Pitch classes modulo 12 and the transposition/inversion group.

Conventions:
    * Pitch classes are residues mod 12 with C = 0, C# = 1, ..., B = 11.
    * Transposition by n sends x to x + n; inversion about 0 shifted by n
      sends x to -x + n (both mod 12).
    * Composition is right-to-left everywhere: ``a * b`` means "apply b,
      then a".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

#: Sharp-preferred pitch-class names, used for all compact rendering.
PITCH_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

#: Flat spellings for the five black keys, used in verbose rendering.
FLAT_NAMES = {1: "Db", 3: "Eb", 6: "Gb", 8: "Ab", 10: "Bb"}


@dataclass(frozen=True, order=True)
class PitchClass:
    """An equal-tempered pitch class; the value is always reduced mod 12."""

    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % 12)

    def __int__(self) -> int:
        return self.value

    def __add__(self, semitones: int) -> "PitchClass":
        return PitchClass(self.value + int(semitones))

    def __neg__(self) -> "PitchClass":
        return PitchClass(-self.value)

    def interval_to(self, other: "PitchClass") -> int:
        """Directed interval from self up to other, as a residue 0..11."""
        return (int(other) - self.value) % 12

    def name(self, verbose: bool = False) -> str:
        base = PITCH_NAMES[self.value]
        if verbose and self.value in FLAT_NAMES:
            return f"{base}/{FLAT_NAMES[self.value]}"
        return base

    def __str__(self) -> str:
        return str(self.value)


PitchLike = Union[PitchClass, int]


def _pc(x: PitchLike) -> PitchClass:
    return x if isinstance(x, PitchClass) else PitchClass(x)


def transpose(n: int, x: PitchLike) -> PitchClass:
    """Transposition by n semitones: x + n mod 12."""
    return PitchClass(int(_pc(x)) + n)


def invert(n: int, x: PitchLike) -> PitchClass:
    """Inversion about 0 followed by transposition by n: -x + n mod 12."""
    return PitchClass(n - int(_pc(x)))


def circle_distance(x: PitchLike, y: PitchLike) -> int:
    """Shortest distance between two pitch classes on the 12-hour clock (0..6)."""
    d = (int(_pc(x)) - int(_pc(y))) % 12
    return min(d, 12 - d)


@dataclass(frozen=True, order=True)
class TIElement:
    """One of the 24 transpositions-or-inversions of the pitch-class clock.

    ``kind`` is "T" (x -> x + index) or "I" (x -> -x + index); ``index``
    is reduced mod 12 at construction.
    """

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("T", "I"):
            raise ValueError(f"kind must be 'T' or 'I', got {self.kind!r}")
        object.__setattr__(self, "index", self.index % 12)

    @staticmethod
    def transposition(n: int) -> "TIElement":
        return TIElement("T", n)

    @staticmethod
    def inversion(n: int) -> "TIElement":
        return TIElement("I", n)

    @property
    def is_inversion(self) -> bool:
        return self.kind == "I"

    def apply(self, x: PitchLike) -> PitchClass:
        if self.kind == "T":
            return transpose(self.index, x)
        return invert(self.index, x)

    def __mul__(self, other: "TIElement") -> "TIElement":
        """Compose right-to-left: (a * b)(x) = a(b(x)).

        The four cases collapse to: the result is a transposition exactly
        when the kinds agree, and the left index adds or subtracts the
        right one according to the left kind.
        """
        kind = "T" if self.kind == other.kind else "I"
        if self.kind == "T":
            return TIElement(kind, self.index + other.index)
        return TIElement(kind, self.index - other.index)

    def inverse(self) -> "TIElement":
        if self.kind == "T":
            return TIElement("T", -self.index)
        return self  # every inversion is an involution

    def __str__(self) -> str:
        return f"{self.kind}_{self.index}"


#: All 24 elements: T_0..T_11 followed by I_0..I_11.
ALL_TI = tuple(
    [TIElement("T", n) for n in range(12)] + [TIElement("I", n) for n in range(12)]
)
