from __future__ import annotations

import json

import pytest

from scripts.tverlab import main
from shared.constants import FIXTURE_DIR


def fixture(name: str) -> str:
    return str(FIXTURE_DIR / name)


def test_chessboard_writes_cx1(capsys) -> None:
    assert main(["chessboard", "2", "2"]) == 0
    assert capsys.readouterr().out == "cx1 4\n0 3\n1 2\n"


def test_chessboard_sides_are_limited(capsys) -> None:
    assert main(["chessboard", "9", "2"]) == 1
    assert "sides must lie" in capsys.readouterr().err


def test_homology_of_a_written_complex(tmp_path, capsys) -> None:
    path = tmp_path / "board.cx1"
    assert main(["chessboard", "3", "2", "--out", str(path)]) == 0
    assert main(["homology", "--complex", str(path), "--prime", "2"]) == 0
    assert capsys.readouterr().out == "betti 2 0 1\n"
    assert main(["homology", "--complex", str(path), "--primes", "2,3"]) == 0
    assert capsys.readouterr().out == "betti 2 0 1\nbetti 3 0 1\n"


def test_homology_drops_trailing_zero_degrees(tmp_path, capsys) -> None:
    path = tmp_path / "two_edges.cx1"
    assert main(["chessboard", "2", "2", "--out", str(path)]) == 0
    assert main(["homology", "--complex", str(path), "--prime", "3"]) == 0
    assert capsys.readouterr().out == "betti 3 1\n"


def test_conn_check_passes_on_small_boards(capsys) -> None:
    assert main(["conn-check", "--max-rows", "3", "--max-cols", "3", "--primes", "2,3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    assert all(line.endswith("PASS") for line in lines)


def test_conn_check_covers_rectangular_grids(capsys) -> None:
    assert main(["conn-check", "--max-rows", "4", "--max-cols", "2", "--primes", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 7
    assert lines[-1].startswith("chessboard 4 2 formula 0 ")
    assert all(line.endswith("PASS") for line in lines)


def test_certify(capsys) -> None:
    code = main(["certify", "--sizes", "3,3", "--caps", "2,1", "--r", "2", "--d", "1", "--primes", "2"])
    assert code == 0
    assert "lower_bound 1 target 2 clears_target yes" in capsys.readouterr().out


def test_find_and_none(capsys) -> None:
    assert main(["find", fixture("interleaved_line.tvb1")]) == 0
    assert capsys.readouterr().out == "part1 2\n0 4\n3\nwitness 1\n"
    assert main(["find", fixture("separated_line.tvb1")]) == 0
    assert capsys.readouterr().out == "none\n"


def test_verify_reports_the_failed_condition(capsys) -> None:
    code = main(["verify", fixture("worked_example.tvb1"), fixture("worked_example.part1")])
    assert code == 2
    out = capsys.readouterr().out
    assert "caps FAIL usage 2 3 3 caps 2 2 3" in out
    assert out.endswith("result FAIL (iii) caps\n")


def test_count_and_enumeration_bound(capsys) -> None:
    assert main(["count", fixture("interleaved_line.tvb1")]) == 0
    assert capsys.readouterr().out == "5\n"
    assert main(["count", fixture("interleaved_line.tvb1"), "--enum-bound", "10"]) == 3
    assert "enumeration bound" in capsys.readouterr().err


def test_malformed_instance_is_a_usage_error(tmp_path, capsys) -> None:
    path = tmp_path / "bad.tvb1"
    path.write_text("tvb1\nd 1\nr 2\nm 1\ncaps 5\npoints 1\n1 0\n", encoding="utf-8")
    assert main(["count", str(path)]) == 1
    assert "line 5" in capsys.readouterr().err


def test_campaign_is_reproducible(capsys) -> None:
    argv = ["campaign", "--d", "1", "--r", "2", "--sizes", "3,3", "--caps", "2,1", "--trials", "3", "--seed", "5"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    report = json.loads(first)
    assert report["success_count"] == 3
    assert report["contradictions"] == []


def test_campaign_rejects_unmet_hypotheses(capsys) -> None:
    argv = ["campaign", "--d", "1", "--r", "2", "--sizes", "3,3", "--caps", "1,1"]
    assert main(argv) == 1
    assert "hypotheses not met" in capsys.readouterr().err
    assert main([*argv, "--override", "--trials", "2"]) == 0


def test_hunt_fills_in_preset_values(capsys) -> None:
    assert main(["hunt", "--preset", "prob56", "--d", "1", "--r", "2", "--trials", "3", "--seed", "56"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["mode"] == "hunt"
    assert report["params"]["color_sizes"] == [3, 3]
    assert report["params"]["caps"] == [1, 1]
    assert report["params"]["strategy"] == "exhaustive"


def test_plot_writes_svg(tmp_path) -> None:
    out = tmp_path / "square.svg"
    assert main(["plot", fixture("square_radon.tvb1"), "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8").startswith("<svg")


def test_unknown_command_exits_with_usage_code() -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["sweep"])
    assert excinfo.value.code == 1
