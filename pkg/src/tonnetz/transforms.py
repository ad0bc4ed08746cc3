"""Contextual inversions P, L, R; words over them; and uniform transformations.

The parallel, leading-tone-exchange, and relative operations are the
inversions whose axis is pinned by two tones of the chord being acted on:

    P <y1,y2,y3> = I(y1+y3) applied pointwise   (root and fifth stay)
    L <y1,y2,y3> = I(y2+y3) applied pointwise   (third and fifth stay)
    R <y1,y2,y3> = I(y1+y2) applied pointwise   (root and third stay)

Each is an involution, and together L and R generate a dihedral group of
order 24 that acts simply transitively on the consonant triads — the same
group structure as the transposition/inversion action, realized by
different bijections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .pitchspace import ALL_TI, PitchClass, TIElement
from .triads import TRIADS, ConsonantTriad

TriadMap = Callable[[ConsonantTriad], ConsonantTriad]


def ti_on_triad(g: TIElement, y: ConsonantTriad) -> ConsonantTriad:
    """Apply a transposition or inversion to each tone of a triad."""
    return ConsonantTriad(tuple(g.apply(t) for t in y.tones))


def _contextual_inversion(y: ConsonantTriad, i: int, j: int) -> ConsonantTriad:
    axis = int(y.tones[i]) + int(y.tones[j])
    return ti_on_triad(TIElement("I", axis), y)


def parallel(y: ConsonantTriad) -> ConsonantTriad:
    """P: invert about the root/fifth pair (C major <-> c minor)."""
    return _contextual_inversion(y, 0, 2)


def leading_tone_exchange(y: ConsonantTriad) -> ConsonantTriad:
    """L: invert about the third/fifth pair (C major <-> e minor)."""
    return _contextual_inversion(y, 1, 2)


def relative(y: ConsonantTriad) -> ConsonantTriad:
    """R: invert about the root/third pair (C major <-> a minor)."""
    return _contextual_inversion(y, 0, 1)


LETTER_OPS: dict[str, TriadMap] = {
    "P": parallel,
    "L": leading_tone_exchange,
    "R": relative,
}

#: Which pair of tone positions each operation holds fixed.
_AXIS_POSITIONS = {"P": (0, 2), "L": (1, 2), "R": (0, 1)}


def apply_letter(letter: str, y: ConsonantTriad) -> ConsonantTriad:
    try:
        op = LETTER_OPS[letter]
    except KeyError:
        raise ValueError(f"unknown operation letter {letter!r}; expected P, L, or R")
    return op(y)


def inversion_axis(letter: str, y: ConsonantTriad) -> tuple[int, int]:
    """Endpoints of the fixed axis of P/L/R at a triad, in 24ths of the clock.

    Counting the clock in half-semitone ticks (24 per revolution), the axis
    of the inversion about tones y_i and y_j passes through ticks
    (y_i + y_j) mod 24 and the antipode 12 ticks later; dividing by two
    recovers the familiar half-integer clock positions.
    """
    i, j = _AXIS_POSITIONS[letter] if letter in _AXIS_POSITIONS else (None, None)
    if i is None:
        raise ValueError(f"unknown operation letter {letter!r}; expected P, L, or R")
    tick = (int(y.tones[i]) + int(y.tones[j])) % 12
    return (tick, tick + 12)


@dataclass(frozen=True)
class PlrWord:
    """A finite word over the letters P, L, R, applied right-to-left."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        for ch in self.letters:
            if ch not in LETTER_OPS:
                raise ValueError(f"unknown operation letter {ch!r}; expected P, L, or R")
        object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def from_string(cls, text: str) -> "PlrWord":
        return cls(tuple(text))

    def apply(self, y: ConsonantTriad) -> ConsonantTriad:
        for ch in reversed(self.letters):
            y = LETTER_OPS[ch](y)
        return y

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters) if self.letters else "(empty)"


def word_apply(word: PlrWord, y: ConsonantTriad) -> ConsonantTriad:
    """Evaluate a PLR word at a triad (rightmost letter acts first)."""
    return word.apply(y)


def triad_images(fn: TriadMap) -> tuple[int, ...]:
    """The permutation a triad map induces on canonical indices 0..23."""
    return tuple(fn(TRIADS[i]).index for i in range(24))


@dataclass(frozen=True, order=True)
class DihedralNormalForm:
    """Normal form s^k t^e in the generators s = LR and t = L.

    The rendered word is read in application order: first s, k times, then
    t, e times.  The 24 pairs (k in 0..11, e in 0..1) name pairwise
    distinct maps and exhaust the group generated by L and R.
    """

    k: int
    e: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", self.k % 12)
        if self.e not in (0, 1):
            raise ValueError(f"e must be 0 or 1, got {self.e}")

    def apply(self, y: ConsonantTriad) -> ConsonantTriad:
        for _ in range(self.k):
            y = leading_tone_exchange(relative(y))  # s = LR
        if self.e:
            y = leading_tone_exchange(y)  # t = L
        return y

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append("s" if self.k == 1 else f"s^{self.k}")
        if self.e:
            parts.append("t")
        return " ".join(parts) if parts else "1"


@lru_cache(maxsize=1)
def _normal_form_images() -> dict[tuple[int, ...], DihedralNormalForm]:
    table: dict[tuple[int, ...], DihedralNormalForm] = {}
    for e in (0, 1):
        for k in range(12):
            nf = DihedralNormalForm(k, e)
            images = triad_images(nf.apply)
            if images in table:
                raise AssertionError("normal forms must be pairwise distinct")
            table[images] = nf
    return table


def word_normal_form(word: PlrWord) -> DihedralNormalForm:
    """The unique s^k t^e acting like the given word on all 24 triads."""
    return _normal_form_images()[triad_images(word.apply)]


def normal_form_alias(nf: DihedralNormalForm) -> str | None:
    """A generator letter (or "identity") when the normal form has one."""
    aliases = {
        DihedralNormalForm(0, 0): "identity",
        word_normal_form(PlrWord.from_string("P")): "P",
        word_normal_form(PlrWord.from_string("L")): "L",
        word_normal_form(PlrWord.from_string("R")): "R",
    }
    return aliases.get(nf)


def find_ti(y: ConsonantTriad, z: ConsonantTriad) -> TIElement:
    """The unique transposition-or-inversion sending triad y to triad z."""
    for g in ALL_TI:
        if ti_on_triad(g, y) == z:
            return g
    raise AssertionError("the transposition/inversion action is transitive")


def find_plr(y: ConsonantTriad, z: ConsonantTriad) -> DihedralNormalForm:
    """The unique element of the L,R-generated group sending y to z."""
    for images, nf in _normal_form_images().items():
        if images[y.index] == z.index:
            return nf
    raise AssertionError("the PLR action is transitive")


@dataclass(frozen=True, order=True)
class Utt:
    """A uniform triadic transformation <sigma, t_plus, t_minus>.

    Acts on a major triad by moving its root up ``t_plus`` semitones, on a
    minor triad by moving its root up ``t_minus``; the parity of the result
    flips exactly when ``sigma`` is "-".
    """

    sigma: str
    t_plus: int
    t_minus: int

    def __post_init__(self) -> None:
        if self.sigma not in ("+", "-"):
            raise ValueError(f"sigma must be '+' or '-', got {self.sigma!r}")
        object.__setattr__(self, "t_plus", self.t_plus % 12)
        object.__setattr__(self, "t_minus", self.t_minus % 12)

    def __str__(self) -> str:
        return f"<{self.sigma},{self.t_plus},{self.t_minus}>"


def utt_apply(u: Utt, y: ConsonantTriad) -> ConsonantTriad:
    shift = u.t_plus if y.is_major else u.t_minus
    root = (int(y.root) + shift) % 12
    flips = u.sigma == "-"
    major_out = y.is_major != flips
    if major_out:
        return TRIADS[root]
    return TRIADS[12 + (root + 7) % 12]  # minor triad with the given root


#: All 288 uniform triadic transformations.
ALL_UTTS = tuple(
    Utt(sigma, a, b) for sigma in ("+", "-") for a in range(12) for b in range(12)
)

PARALLEL_UTT = Utt("-", 0, 0)
LEADING_TONE_UTT = Utt("-", 4, 8)
RELATIVE_UTT = Utt("-", 9, 3)
DOMINANT_UTT = Utt("+", 5, 5)
#: The mode-reversing mediant transformation <-, 9, 8>.
DIATONIC_MEDIANT_UTT = Utt("-", 9, 8)


@lru_cache(maxsize=1)
def _utt_by_images() -> dict[tuple[int, ...], Utt]:
    table = {}
    for u in ALL_UTTS:
        images = triad_images(lambda y, u=u: utt_apply(u, y))
        if images in table:
            raise AssertionError("uniform transformations must act distinctly")
        table[images] = u
    return table


def utt_images(u: Utt) -> tuple[int, ...]:
    """The permutation of canonical triad indices induced by a UTT."""
    return triad_images(lambda y: utt_apply(u, y))


def utt_from_images(images: Iterable[int]) -> Utt:
    """Recover the UTT acting as the given index permutation, if one does."""
    key = tuple(images)
    try:
        return _utt_by_images()[key]
    except KeyError:
        raise ValueError("permutation is not a uniform triadic transformation")


def utt_compose(a: Utt, b: Utt) -> Utt:
    """Compose right-to-left by composing the induced permutations."""
    fa, fb = utt_images(a), utt_images(b)
    return utt_from_images(tuple(fa[fb[i]] for i in range(24)))
