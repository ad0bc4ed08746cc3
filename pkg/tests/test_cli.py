"""Command-line behavior: golden files, exact formats, exits, determinism.

The golden files under tests/golden/ pin the byte-level output of the
deterministic verbs; the structural content behind them is covered by the
module tests, so a golden failure means formatting drifted.
"""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from tonnetz.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize(
    "golden_name,argv",
    [
        ("table.txt", ("table",)),
        ("beethoven.txt", ("beethoven",)),
        ("tonnetz.dot", ("graph", "--which", "tonnetz", "--format", "dot")),
        ("tonnetz.json", ("graph", "--which", "tonnetz", "--format", "json")),
        ("chickenwire.dot", ("graph", "--which", "chickenwire", "--format", "dot")),
        ("chickenwire.json", ("graph", "--which", "chickenwire", "--format", "json")),
    ],
)
def test_output_matches_golden_file(capsys, golden_name, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0
    assert err == ""
    assert out == (GOLDEN / golden_name).read_text(encoding="utf-8")


def test_runs_are_byte_identical(capsys):
    for argv in (("table",), ("beethoven",),
                 ("graph", "--which", "chickenwire", "--format", "json")):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


def test_find_with_alias(capsys):
    code, out, _ = run(capsys, "find", "--from", "C", "--to", "c")
    assert code == 0
    assert out == "T/I: I_7   PLR: s^4 t (= P)\n"


def test_find_without_alias(capsys):
    code, out, _ = run(capsys, "find", "--from", "C", "--to", "G")
    assert code == 0
    assert out == "T/I: T_7   PLR: s^11\n"


def test_find_json(capsys):
    code, out, _ = run(capsys, "find", "--from", "C", "--to", "c", "--json")
    assert code == 0
    assert json.loads(out) == {
        "from": "C",
        "to": "c",
        "ti": "I_7",
        "plr": "s^4 t",
        "plr_k": 4,
        "plr_e": 1,
        "plr_alias": "P",
    }


def test_apply_word(capsys):
    code, out, _ = run(capsys, "apply", "--word", "RLR", "--chord", "<0,4,7>")
    assert code == 0
    assert out == "d <9,5,2>\n"


def test_apply_json(capsys):
    code, out, _ = run(capsys, "apply", "--word", "P", "--chord", "C", "--json")
    assert code == 0
    assert json.loads(out) == {
        "word": "P",
        "start": "C",
        "result": "c",
        "tones": [7, 3, 0],
    }


def test_apply_figure(capsys, tmp_path):
    target = tmp_path / "clock.png"
    code, out, _ = run(
        capsys, "apply", "--word", "L", "--chord", "C", "--figure", str(target)
    )
    assert code == 0
    assert out == "e <11,7,4>\n"
    assert target.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_duality_verb_passes(capsys):
    code, out, err = run(capsys, "duality")
    assert code == 0
    assert err == ""
    assert out.count("[ok]") == 9
    assert out.rstrip().endswith("all checks passed")


def test_duality_json(capsys):
    code, out, _ = run(capsys, "duality", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["commuting_pairs"] == 576


def test_hook_verb_passes(capsys):
    code, out, err = run(capsys, "hook")
    assert code == 0
    assert err == ""
    assert out.count("[ok]") == 10
    assert out.rstrip().endswith("all checks passed")


def test_analyze_fixture(capsys):
    from tonnetz.analysis import fixture_path

    code, out, _ = run(capsys, "analyze", str(fixture_path("pachelbel_canon")))
    assert code == 0
    assert out == (
        "step  from  to  T/I  PLR\n"
        "1     D     A   T_7  s^11\n"
        "2     A     b   I_3  s^2 t\n"
        "3     b     f#  T_7  s\n"
    )


def test_analyze_json(capsys):
    from tonnetz.analysis import fixture_path

    code, out, _ = run(
        capsys, "analyze", str(fixture_path("ives_religion")), "--json"
    )
    assert code == 0
    steps = json.loads(out)["steps"]
    assert steps[0] == {"from": "D", "to": "a", "ti": "I_6", "plr": "s^3 t"}
    assert len(steps) == 3


def test_analyze_missing_file(capsys):
    code, out, err = run(capsys, "analyze", "no_such_file.txt")
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_analyze_reports_bad_token_with_position(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("C G\nd X e\n", encoding="utf-8")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1
    assert "'X'" in err
    assert "line 2" in err


def test_apply_rejects_bad_word(capsys):
    code, _, err = run(capsys, "apply", "--word", "PLX", "--chord", "C")
    assert code == 1
    assert err.startswith("error:")


def test_find_rejects_bad_chord(capsys):
    code, _, err = run(capsys, "find", "--from", "H", "--to", "C")
    assert code == 1
    assert "H" in err


def test_parsimony_text(capsys):
    code, out, _ = run(capsys, "parsimony")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("class")
    assert lines[1].startswith("<0,3,7>")
    assert "excluded (all voices fixed)" in lines[-1]
    assert len(lines) == 13  # header + 12 classes


def test_parsimony_json(capsys):
    code, out, _ = run(capsys, "parsimony", "--json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 12
    assert rows[0]["class"] == [0, 3, 7]
    assert rows[0]["max"] == 2
    assert rows[-1]["class"] == [0, 4, 8]
    assert rows[-1]["excluded"] is True


def test_usage_errors_exit_2(capsys):
    assert main([]) == 2
    capsys.readouterr()
    assert main(["bogus-verb"]) == 2
    capsys.readouterr()
    assert main(["graph"]) == 2  # --which is required
    capsys.readouterr()


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "tonnetz.cli", "find", "--from", "C", "--to", "c"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert result.stdout == "T/I: I_7   PLR: s^4 t (= P)\n"
