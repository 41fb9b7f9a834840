"""End-to-end CLI behavior: output shapes, exit codes, files on disk."""

import json
import subprocess
import sys

import pytest

from metricdim import (
    __version__,
    build_landmark_graph,
    landmark_set_from_obj,
    landmark_set_to_obj,
    landmark_graph_to_dot,
)
from metricdim.cli import main
from conftest import (
    BAD4_LANDMARKS,
    BAD4_PARAMS,
    FIG1_LANDMARKS,
    FIG1_PARAMS,
    RAINBOW_LANDMARKS,
)


def write_set(tmp_path, name, n, landmarks):
    path = tmp_path / name
    path.write_text(
        json.dumps({"n": list(n), "landmarks": [list(v) for v in landmarks]})
    )
    return str(path)


@pytest.fixture
def fig1_file(tmp_path):
    return write_set(tmp_path, "fig1.json", FIG1_PARAMS, FIG1_LANDMARKS)


@pytest.fixture
def bad4_file(tmp_path):
    return write_set(tmp_path, "bad4.json", BAD4_PARAMS, BAD4_LANDMARKS)


class TestClassify:
    @pytest.mark.parametrize(
        "n, expected",
        [("5,6,11", "Middle"), ("3,3,8", "Upper"), ("6,7,7", "Lower")],
    )
    def test_prints_the_cone(self, capsys, n, expected):
        assert main(["classify", "--n", n]) == 0
        assert capsys.readouterr().out == expected + "\n"

    @pytest.mark.parametrize("n", ["3,4", "a,b,c", "3,4,5,6", "2,3,3", "3,4,3"])
    def test_bad_parameters_exit_two(self, capsys, n):
        assert main(["classify", "--n", n]) == 2
        assert "error:" in capsys.readouterr().err


class TestConstruct:
    def test_stdout_document_round_trips(self, capsys):
        assert main(["construct", "--n", "3,4,6"]) == 0
        obj = json.loads(capsys.readouterr().out)
        lset = landmark_set_from_obj(obj)
        assert len(lset) == 12
        assert lset.sides == ("L",) * 6 + ("R",) * 6

    def test_plus_one_bumps_parameters(self, capsys):
        assert main(["construct", "--n", "3,4,6", "--plus-one"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["n"] == [4, 5, 7]
        assert len(obj["landmarks"]) == 13
        assert obj["landmarks"][-1] == [4, 5, 7]
        assert obj["sides"][-1] == "U"

    def test_out_file_and_trace(self, tmp_path, capsys):
        out = str(tmp_path / "set.json")
        code = main(["construct", "--n", "5,7,11", "--out", out, "--trace"])
        assert code == 0
        assert capsys.readouterr().out == ""
        obj = json.loads((tmp_path / "set.json").read_text())
        assert len(obj["landmarks"]) == 22
        trace = json.loads((tmp_path / "set.json.trace.json").read_text())
        assert trace["parity"] == "odd"
        assert trace["inserts"] == [[1, 2]]
        assert trace["replacement"] == {"from": [4, 1, 8], "to": [4, 7, 8]}

    def test_trace_without_out_exits_two(self, capsys):
        assert main(["construct", "--n", "5,7,11", "--trace"]) == 2
        assert "--trace needs --out" in capsys.readouterr().err

    def test_non_middle_names_the_cone(self, capsys):
        assert main(["construct", "--n", "3,3,8"]) == 2
        err = capsys.readouterr().err
        assert "upper cone" in err
        assert main(["construct", "--n", "6,7,7"]) == 2
        assert "lower cone" in capsys.readouterr().err

    @pytest.mark.parametrize("n", ["3,4,6", "4,3,6", "5,7,11", "4,5,8"])
    def test_construct_verify_round_trip(self, tmp_path, capsys, n):
        out = str(tmp_path / "w.json")
        assert main(["construct", "--n", n, "--out", out]) == 0
        assert main(["verify", out]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["resolving"] is True
        assert report["witness"] is None


class TestVerify:
    def test_fig1_verifies_clean(self, capsys, fig1_file):
        assert main(["verify", fig1_file]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["n"] == [4, 5, 7]
        assert report["method"] == "both"
        assert report["resolving"] is True
        assert set(report["results"]) == {"footprint", "distance"}
        assert report["domination"]["locating_total_dominating"] is True

    def test_failing_set_exits_one_with_witness(self, tmp_path, capsys):
        path = write_set(tmp_path, "one.json", (3, 3, 3), [(1, 1, 1)])
        assert main(["verify", path]) == 1
        captured = capsys.readouterr()
        report = json.loads(captured.out)
        assert report["resolving"] is False
        assert report["witness"] == [[1, 1, 2], [1, 1, 3]]
        assert "not resolving" in captured.err

    def test_single_method_runs_alone(self, capsys, fig1_file):
        assert main(["verify", fig1_file, "--method", "footprint"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert list(report["results"]) == ["footprint"]
        assert main(["verify", fig1_file, "--method", "distance"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert list(report["results"]) == ["distance"]

    def test_missing_file_exits_two(self, capsys, tmp_path):
        assert main(["verify", str(tmp_path / "absent.json")]) == 2
        assert "error:" in capsys.readouterr().err

    def test_invalid_json_exits_two(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["verify", str(path)]) == 2

    def test_unknown_key_exits_two(self, capsys, tmp_path):
        path = tmp_path / "extra.json"
        path.write_text(
            json.dumps({"n": [3, 3, 3], "landmarks": [[1, 1, 1]], "x": 1})
        )
        assert main(["verify", str(path)]) == 2
        assert "unknown keys" in capsys.readouterr().err


class TestDetect:
    def test_bad4_report(self, capsys, bad4_file):
        assert main(["detect", bad4_file]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["basic"] is False
        assert report["counts"]["Bad4Cycle"] == 1
        assert report["predictions"] == {
            "basic_resolving": None,
            "triple_looped_resolving": None,
        }
        witness = report["witnesses"]["Bad4Cycle"][0]
        assert witness["landmarks"] == [
            [1, 1, 1], [2, 2, 1], [3, 2, 2], [1, 3, 2]
        ]
        assert witness["hyperedges"] == [
            ["pink", 1], ["green", 2], ["pink", 2], ["blue", 1]
        ]
        assert report["notes"] == []

    def test_triple_loop_with_rainbow_adds_note(self, tmp_path, capsys):
        extended = tuple(RAINBOW_LANDMARKS) + ((4, 4, 4),)
        path = write_set(tmp_path, "rainbow.json", (4, 4, 4), extended)
        assert main(["detect", path]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["counts"]["TripleLoop"] == 1
        assert report["counts"]["Rainbow22Triangle"] == 3
        assert report["basic"] is False
        assert any("cannot resolve" in note for note in report["notes"])

    def test_basic_input_reports_predictions(self, tmp_path, capsys):
        out = str(tmp_path / "w.json")
        assert main(["construct", "--n", "3,4,6", "--out", out]) == 0
        assert main(["detect", out]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["basic"] is True
        assert report["predictions"]["basic_resolving"] is True
        assert report["predictions"]["triple_looped_resolving"] is True
        assert all(count == 0 for count in report["counts"].values())


class TestSearch:
    def test_greedy_exits_zero(self, capsys):
        assert main(["search", "--n", "3,3,3", "--mode", "greedy"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["mode"] == "greedy"
        assert report["size"] == len(report["landmarks"])
        assert report["proved_minimum"] is False
        assert report["seed"] == 0

    def test_exhaustive_inconclusive_exits_one(self, capsys):
        code = main(
            ["search", "--n", "3,3,3", "--max-size", "2", "--threads", "1"]
        )
        assert code == 1
        report = json.loads(capsys.readouterr().out)
        assert report["refuted_sizes"] == [1, 2]
        assert report["landmarks"] is None

    def test_exhaustive_conclusive_with_pruning(self, capsys):
        code = main(
            [
                "search",
                "--n",
                "3,3,3",
                "--max-size",
                "6",
                "--threads",
                "1",
                "--allow-pruning",
            ]
        )
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["size"] == 6
        assert report["proved_minimum"] is True

    def test_budget_flag_blocks_the_scan(self, capsys):
        code = main(
            ["search", "--n", "3,3,3", "--budget", "10", "--threads", "1"]
        )
        assert code == 1
        report = json.loads(capsys.readouterr().out)
        assert report["budget"] == 10
        assert "budget" in report["inconclusive_reason"]

    def test_budget_env_variable(self, capsys, monkeypatch):
        monkeypatch.setenv("METRIC_DIM_BUDGET", "10")
        code = main(["search", "--n", "3,3,3", "--threads", "1"])
        assert code == 1
        report = json.loads(capsys.readouterr().out)
        assert report["budget"] == 10

    def test_budget_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("METRIC_DIM_BUDGET", "10")
        code = main(
            [
                "search",
                "--n",
                "3,3,3",
                "--max-size",
                "2",
                "--budget",
                "100000",
                "--threads",
                "1",
            ]
        )
        assert code == 1
        assert json.loads(capsys.readouterr().out)["budget"] == 100000

    def test_bad_budget_env_exits_two(self, capsys, monkeypatch):
        monkeypatch.setenv("METRIC_DIM_BUDGET", "lots")
        assert main(["search", "--n", "3,3,3", "--threads", "1"]) == 2


class TestExportDot:
    BAD4_DOT = (
        "graph landmarks {\n"
        '  w1 [label="(1,1,1)"];\n'
        '  w2 [label="(2,2,1)"];\n'
        '  w3 [label="(3,2,2)"];\n'
        '  w4 [label="(1,3,2)"];\n'
        "  w1 -- w4 [color=blue];\n"
        "  w2 -- w2 [color=blue];\n"
        "  w3 -- w3 [color=blue];\n"
        "  w1 -- w1 [color=green];\n"
        "  w2 -- w3 [color=green];\n"
        "  w4 -- w4 [color=green];\n"
        "  w1 -- w2 [color=pink];\n"
        "  w3 -- w4 [color=pink];\n"
        "}\n"
    )

    def test_bad4_is_byte_exact(self, capsys, bad4_file):
        assert main(["export-dot", bad4_file]) == 0
        assert capsys.readouterr().out == self.BAD4_DOT

    def test_fig1_hub_and_loop_counts(self, capsys, fig1_file):
        assert main(["export-dot", fig1_file]) == 0
        dot = capsys.readouterr().out
        lines = dot.splitlines()
        assert sum("h_blue" in ln and "shape=point" in ln for ln in lines) == 3
        assert sum("h_green" in ln and "shape=point" in ln for ln in lines) == 4
        assert sum("h_pink" in ln for ln in lines) == 0
        pink_sticks = [
            ln for ln in lines if "[color=pink]" in ln and "w13 -- w13" not in ln
        ]
        assert len(pink_sticks) == 6
        assert sum("w13 -- w13" in ln for ln in lines) == 3

    def test_matches_library_rendering_bytes(self, capsys, fig1_set, fig1_file):
        expected = landmark_graph_to_dot(build_landmark_graph(fig1_set))
        assert main(["export-dot", fig1_file]) == 0
        first = capsys.readouterr().out
        assert main(["export-dot", fig1_file]) == 0
        second = capsys.readouterr().out
        assert first == second == expected


class TestManifest:
    def test_manifest_written_next_to_output(self, tmp_path):
        out = str(tmp_path / "w.json")
        code = main(
            ["construct", "--n", "3,4,6", "--out", out, "--manifest", "--trace"]
        )
        assert code == 0
        manifest = json.loads((tmp_path / "w.json.manifest.json").read_text())
        assert manifest["command"] == "construct"
        assert manifest["version"] == __version__
        assert manifest["parameters"]["n"] == "3,4,6"
        assert manifest["inputs"] == []
        assert manifest["outputs"] == [out, out + ".trace.json"]
        assert manifest["duration_seconds"] >= 0

    def test_verify_manifest_lists_the_input(self, tmp_path, fig1_file):
        out = str(tmp_path / "report.json")
        code = main(["verify", fig1_file, "--out", out, "--manifest"])
        assert code == 0
        manifest = json.loads((tmp_path / "report.json.manifest.json").read_text())
        assert manifest["inputs"] == [fig1_file]
        assert manifest["outputs"] == [out]

    def test_manifest_without_out_exits_two(self, capsys):
        assert main(["classify", "--n", "3,4,6"]) == 0
        capsys.readouterr()
        assert main(["construct", "--n", "3,4,6", "--manifest"]) == 2
        assert "--manifest needs --out" in capsys.readouterr().err


class TestParserBehavior:
    def test_unknown_subcommand_exits_two(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert capsys.readouterr().out.strip() == __version__

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "metricdim", "classify", "--n", "5,6,11"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "Middle\n"

    def test_console_script(self):
        proc = subprocess.run(
            ["metricdim", "classify", "--n", "3,3,8"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "Upper\n"


class TestJsonRendering:
    def test_landmark_lists_stay_on_one_line(self, capsys, fig1_file):
        assert main(["verify", fig1_file, "--method", "distance"]) == 0
        text = capsys.readouterr().out
        assert '"n": [4, 5, 7]' in text
        assert json.loads(text)  # still valid JSON

    def test_construct_output_is_stable(self, capsys):
        assert main(["construct", "--n", "5,6,11"]) == 0
        first = capsys.readouterr().out
        assert main(["construct", "--n", "5,6,11"]) == 0
        assert capsys.readouterr().out == first
        set_obj = json.loads(first)
        rebuilt = landmark_set_to_obj(landmark_set_from_obj(set_obj))
        assert rebuilt == set_obj