import io
import json

import pytest

from cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS, main


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def test_classify_json(tmp_path, capsys):
    path = write(tmp_path, "t.json", {"vertices": [[5, 1], [4, -3], [0, 0]]})
    assert main(["classify", "--input", path]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["classes"] == ["strictly_negative", "strictly_positive", "completely"]
    assert doc["angle_measures"] == ["19/15", "54/35", "25/21"]
    assert doc["is_inscribed"] is True


def test_classify_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"vertices": [[0, 0], [6, 0], [3, 2]]}'))
    assert main(["classify", "--format", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("TRIANGLE (0, 0) (6, 0) (3, 2)\n")
    assert "inscribed: no" in out


def test_circumcircle_text(tmp_path, capsys):
    path = write(tmp_path, "t.json", {"vertices": [[0, 0], [2, 2], [2, -2]]})
    assert main(["circumcircle", "--input", path, "--format", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "multiplicity: unbounded_family" in out
    assert "ray: center (2, 0) radius 2, center velocity (1, 0), radius rate 1, τ in [0, ∞]" in out


def test_incircle_writes_output_file(tmp_path, capsys):
    path = write(tmp_path, "t.json", {"vertices": [[4, 2], [4, -2], [0, 0]]})
    out_path = tmp_path / "out.txt"
    assert main(["incircle", "--input", path, "--format", "text", "--output", str(out_path)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    text = out_path.read_text(encoding="utf-8")
    assert "incircle: center (8/3, 0) radius 4/3" in text
    assert "applicable: yes, containment: ok" in text


def test_angle_commands(tmp_path, capsys):
    path = write(tmp_path, "a.json", {"vertex": [0, 0], "ray1": [1, 0], "ray2": [0, 1]})
    assert main(["angle", "--input", path, "--format", "text"]) == EXIT_OK
    assert capsys.readouterr().out == "measure: 2\nclass: strictly_negative\n"

    path = write(tmp_path, "demo.json", {
        "circle": {"center": [0, 0], "radius": 2},
        "arc_start": [2, 0], "arc_end": [0, 2], "vertex": [-2, 0],
    })
    assert main(["angle", "--input", path]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"alpha": "1", "theta": "2"}


def test_degenerate_input_exit_code(tmp_path, capsys):
    path = write(tmp_path, "t.json", {"vertices": [[0, 0], [1, 1], [2, 2]]})
    assert main(["classify", "--input", path]) == EXIT_USAGE
    assert "degenerate triangle" in capsys.readouterr().err


def test_missing_input_file(tmp_path, capsys):
    assert main(["classify", "--input", str(tmp_path / "nope.json")]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error: ")


def test_invalid_json_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{", encoding="utf-8")
    assert main(["incircle", "--input", str(path)]) == EXIT_USAGE
    assert "invalid JSON" in capsys.readouterr().err


def test_figure(tmp_path, capsys):
    out_path = tmp_path / "incircle.svg"
    assert main(["figure", "incircle", "--output", str(out_path)]) == EXIT_OK
    assert out_path.read_text(encoding="utf-8").endswith("</svg>\n")

    assert main(["figure", "nope"]) == EXIT_USAGE
    assert "unknown figure" in capsys.readouterr().err
    assert main(["figure"]) == EXIT_USAGE


def test_verify(tmp_path, capsys):
    report_dir = tmp_path / "reports"
    assert main(["verify", "--box", "1", "--report-dir", str(report_dir)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("TAXICAB PROPERTY SUITE")
    assert (report_dir / "report.txt").read_text(encoding="utf-8") == out
    doc = json.loads((report_dir / "report.json").read_text(encoding="utf-8"))
    assert doc["ok"] is True
    assert doc["config"]["box_max"] == 1
    assert doc["config"]["incircle_resolution"] == "1/2"


def test_verify_json_with_timings(tmp_path, capsys):
    assert main(["verify", "--box", "1", "--no-fixtures", "--timings", "--format", "json",
                 "--report-dir", str(tmp_path)]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["triangles_checked"] == 4
    assert "elapsed_seconds" in doc


def test_verify_rejects_empty_box(tmp_path, capsys):
    assert main(["verify", "--box", "0", "--report-dir", str(tmp_path)]) == EXIT_USAGE
    assert "holds no triangle" in capsys.readouterr().err


def test_verify_reports_violations(tmp_path, monkeypatch, capsys):
    from services import verify

    checks = dict(verify.PROPERTY_CHECKS)
    checks["angle_sum"] = lambda case: "planted"
    monkeypatch.setattr(verify, "PROPERTY_CHECKS", checks)
    assert main(["verify", "--box", "1", "--no-fixtures", "--workers", "1",
                 "--report-dir", str(tmp_path)]) == EXIT_VIOLATIONS
    assert "✗ angle_sum" in capsys.readouterr().out


def test_bad_resolution_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--resolution", "0"])
    assert exc.value.code == 2
