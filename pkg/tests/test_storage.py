from services.storage import ensure_storage, read_report, write_report


def test_write_and_read_report(tmp_path):
    directory = tmp_path / "nested" / "reports"
    json_path, text_path = write_report({"ok": True, "summary": []}, "all good\n", str(directory))
    assert json_path.endswith("report.json")
    assert open(text_path, encoding="utf-8").read() == "all good\n"
    assert read_report(str(directory)) == {"ok": True, "summary": []}


def test_read_missing_report(tmp_path):
    assert read_report(str(tmp_path)) is None


def test_ensure_storage_is_idempotent(tmp_path):
    target = str(tmp_path / "out")
    assert ensure_storage(target) == target
    assert ensure_storage(target) == target
