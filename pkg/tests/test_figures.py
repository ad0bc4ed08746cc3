"""The figure renderers produce real image files."""

from tonnetz.analysis import (
    analyze,
    fixture_path,
    load_progression,
    parsimony_study,
)
from tonnetz.figures import (
    save_parsimony_chart,
    save_progression_chart,
    save_triad_clock,
)
from tonnetz.transforms import parallel
from tonnetz.triads import TRIADS

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_triad_clock_with_axis_and_image(tmp_path):
    out = save_triad_clock(
        TRIADS[0],
        tmp_path / "clock.png",
        transformed=parallel(TRIADS[0]),
        axis_letters=("P",),
    )
    assert out.is_file()
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_progression_chart(tmp_path):
    progression = load_progression(fixture_path("pachelbel_canon"))
    out = save_progression_chart(
        progression, analyze(progression), tmp_path / "motion.png"
    )
    assert out.is_file()
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_parsimony_chart(tmp_path):
    out = save_parsimony_chart(parsimony_study(), tmp_path / "parsimony.png")
    assert out.is_file()
    assert out.read_bytes()[:8] == PNG_MAGIC
