# SPDX-License-Identifier: CC-BY-NC-4.0

import json

import pytest

from regbound.cli import join_range_values, run, twist_range
from regbound.reports import OutputRecord, cell_json, render
from regbound.tables import Interval


def _json(capsys, argv):
    assert run(argv + ["--format", "json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_palatini_cohomology(capsys):
    report = _json(capsys, ["cohomology", "--variety", "palatini", "--t", "0", "--i", "1", "--range", "0..4"])
    assert report["command"] == "cohomology"
    values = {cell["k"]: cell["value"] for cell in report["results"]["cells"]}
    assert values == {0: 0, 1: 0, 2: 1, 3: 0, 4: 0}


def test_negative_range(capsys):
    report = _json(capsys, ["cohomology", "--variety", "ci22", "--i", "0", "--range=-2..2"])
    assert [cell["value"] for cell in report["results"]["cells"]] == [0, 0, 0, 0, 2]


def test_intervals_are_reported(capsys):
    report = _json(capsys, ["cohomology", "--variety", "skew-lines", "--source", "sequence",
                            "--i", "1", "--range", "0..0"])
    assert report["results"]["cells"] == [{"i": 1, "k": 0, "interval": {"lo": 1, "hi": 2}}]


def test_verify_bound_table(capsys):
    assert run(["verify-bound", "--setting", "threefold-p5"]) == 0
    out = capsys.readouterr().out
    assert "reg <= d - 3" in out
    assert "kodaira-vanishing" in out


def test_verify_bound_json(capsys):
    report = _json(capsys, ["verify-bound", "--setting", "surface-p4"])
    assert report["results"]["bound"] == "reg <= d - 3"
    assert len(report["axioms"]) == 4
    threefold = _json(capsys, ["verify-bound", "--setting", "threefold-p5"])
    assert threefold["results"]["extremal_degrees"] == [3, 4]
    assert threefold["results"]["below_d_minus_1_from_5"] is True


def test_catalog_show(capsys):
    report = _json(capsys, ["catalog", "show", "segre"])
    assert report["results"]["degree"] == 3
    assert report["results"]["reg"] == 2
    assert report["results"]["degree_check"]["ok"] is True
    palatini = _json(capsys, ["catalog", "show", "palatini", "--t", "1"])
    assert palatini["results"]["degree"] == 33


def test_catalog_list(capsys):
    report = _json(capsys, ["catalog", "list"])
    assert "palatini" in [entry["name"] for entry in report["results"]["varieties"]]


def test_other_commands(capsys):
    assert _json(capsys, ["regularity", "--variety", "skew-lines"])["results"]["reg"] == 2
    assert _json(capsys, ["betti", "--N", "5", "--degrees", "2", "2"])["results"]["reg"] == 3
    assert _json(capsys, ["chern", "--t", "0"])["results"]["dependency_locus_degree"] == "7"
    quadric = _json(capsys, ["quadric", "--n", "3", "--rank", "4", "--class", "3", "2"])
    assert quadric["results"]["classification"] == {"kind": "linked-to-linear", "degree": 3}
    assert quadric["results"]["reg"] == 3
    assert _json(capsys, ["regularity", "--variety", "quadric-linked", "--class", "4", "3"])["results"]["reg"] == 4
    liaison = _json(capsys, ["liaison-check", "--x1", "skew-lines", "--x2", "skew-lines", "--degrees", "2", "2"])
    assert liaison["results"]["holds"] is True
    normality = _json(capsys, ["normality", "--variety", "palatini", "--range", "1..3"])
    assert [row["normal"] for row in normality["results"]["rows"]] == [True, False, True]
    assert normality["results"]["normal_from_d_minus_4"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["cohomology", "--variety", "palatini", "--t", "21"],
        [],
        ["bogus"],
        ["cohomology", "--variety", "palatini", "--range", "5..1"],
        ["cohomology", "--variety", "palatini", "--range", "five"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["cohomology", "--variety", "veronese"],
        ["quadric", "--n", "3", "--rank", "4", "--class", "5", "2"],
        ["betti", "--variety", "palatini"],
        ["catalog", "show"],
    ],
)
def test_domain_errors(argv, capsys):
    assert run(argv) == 1
    assert capsys.readouterr().err


def test_help(capsys):
    assert run(["--help"]) == 0


def test_json_is_deterministic(capsys):
    argv = ["regularity", "--variety", "segre", "--format", "json"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first


def test_out_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run(["regularity", "--variety", "ci22", "--format", "json", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8"))["results"]["reg"] == 3


def test_csv(capsys):
    assert run(["cohomology", "--variety", "ci22", "--i", "0", "--range", "0..2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "i,k,lo,hi"
    assert lines[-1] == "0,2,2,2"


def test_twist_range():
    assert twist_range("-5..10") == (-5, 10)


def test_cell_json():
    assert cell_json(0, 1, Interval(1)) == {"i": 0, "k": 1, "interval": {"lo": 1, "hi": None}}
    assert cell_json(0, 1, Interval.of(3)) == {"i": 0, "k": 1, "value": 3}


def test_render_table_lists_axioms():
    record = OutputRecord("demo", {}, {"x": 1}, [{"name": "a", "statement": "b"}])
    text = render(record, "table")
    assert "x: 1" in text
    assert "  - a: b" in text


def test_negative_range_as_separate_argument(capsys):
    report = _json(capsys, ["cohomology", "--variety", "palatini", "--i", "1", "--range", "-5..10"])
    assert report["inputs"]["range"] == "-5..10"
    assert len(report["results"]["cells"]) == 16
    assert {cell["k"]: cell["value"] for cell in report["results"]["cells"]}[2] == 1


def test_join_range_values():
    assert join_range_values(["--range", "-2..3", "--i", "1"]) == ["--range=-2..3", "--i", "1"]
    assert join_range_values(["--range", "five"]) == ["--range", "five"]
    assert join_range_values(["--range"]) == ["--range"]


def test_unwritable_out_path(tmp_path, capsys):
    out = tmp_path / "missing" / "report.json"
    assert run(["regularity", "--variety", "ci22", "--out", str(out)]) == 1
    assert "cannot write report" in capsys.readouterr().err
    assert not out.exists()


def test_quadric_linear_class(capsys):
    report = _json(capsys, ["quadric", "--n", "2", "--rank", "4", "--class", "1", "0"])
    results = report["results"]
    assert results["classification"] == {"kind": "linked-to-linear", "degree": 1}
    assert results["depth_at_vertex"] == 3
    assert results["cells"]
    assert "resolution" not in results
    assert "a >= 2" in results["resolution_note"]
