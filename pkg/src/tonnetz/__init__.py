"""Dihedral group actions on consonant triads.

Two order-24 dihedral groups act simply transitively on the major and
minor triads: the transpositions and inversions of the pitch-class clock,
and the neo-Riemannian group generated by the parallel, leading-tone, and
relative operations.  This package implements both actions, verifies by
computation that each is the full centralizer of the other, builds the
Tonnetz and its chicken-wire dual, and analyzes chord progressions in
both languages at once.
"""

from .analysis import (
    Progression,
    TransformationStep,
    analyze,
    beethoven_sequence,
    contextual_displacements,
    ives_dual_motion_report,
    load_progression,
    parse_progression,
    parsimony_study,
    verify_square,
)
from .duality import (
    build_plr_group,
    build_quasi_uniform_group,
    build_ti_group,
    build_uniform_group,
    verify_duality,
    verify_hook,
)
from .graphs import (
    LabeledGraph,
    beethoven_path,
    build_chickenwire,
    build_tonnetz,
    dual_of_tonnetz,
    export_dot,
    export_json,
)
from .permutations import PermGroup, Permutation, centralizer_semiregular, generate
from .pitchspace import PitchClass, TIElement, circle_distance, invert, transpose
from .transforms import (
    DihedralNormalForm,
    PlrWord,
    Utt,
    find_plr,
    find_ti,
    inversion_axis,
    leading_tone_exchange,
    parallel,
    relative,
    utt_apply,
    utt_compose,
    word_apply,
    word_normal_form,
)
from .triads import ChordParseError, ConsonantTriad, common_tones, parse_name, triad_table

__version__ = "0.1.0"

__all__ = [
    "ChordParseError",
    "ConsonantTriad",
    "DihedralNormalForm",
    "LabeledGraph",
    "PermGroup",
    "Permutation",
    "PitchClass",
    "PlrWord",
    "Progression",
    "TIElement",
    "TransformationStep",
    "Utt",
    "analyze",
    "beethoven_path",
    "beethoven_sequence",
    "build_chickenwire",
    "build_plr_group",
    "build_quasi_uniform_group",
    "build_ti_group",
    "build_tonnetz",
    "build_uniform_group",
    "centralizer_semiregular",
    "circle_distance",
    "common_tones",
    "contextual_displacements",
    "dual_of_tonnetz",
    "export_dot",
    "export_json",
    "find_plr",
    "find_ti",
    "generate",
    "inversion_axis",
    "invert",
    "ives_dual_motion_report",
    "leading_tone_exchange",
    "load_progression",
    "parallel",
    "parse_name",
    "parse_progression",
    "parsimony_study",
    "relative",
    "transpose",
    "triad_table",
    "utt_apply",
    "utt_compose",
    "verify_duality",
    "verify_hook",
    "verify_square",
    "word_apply",
    "word_normal_form",
]
