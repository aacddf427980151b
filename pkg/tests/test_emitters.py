import json
import math

import numpy as np
import pytest
import sympy as sp

from racg_anosov import Report, __version__
from racg_anosov.core import DomainError, UsageError
from racg_anosov.emitters import CsvEmitter, Emitter, JsonEmitter


def sample_report():
    payload = {"margin": sp.Rational(1, 3), "gap": 0.1, "ratio": 2.0, "inf": math.inf, "vector": np.array([1.5, 2.0]), "flag": np.bool_(True)}
    return Report("gaps", "trace", payload, rows=[[0, 0.1, sp.Rational(-2, 3), None]], header=["n", "x", "y", "z"], seeds={"cartan": 2})


def test_json_numbers():
    text = JsonEmitter({}).render(sample_report())
    assert '"gap": 0.10000000000000001' in text
    assert '"ratio": 2.0' in text
    doc = json.loads(text)
    assert doc["payload"]["margin"] == "1/3"
    assert doc["payload"]["inf"] is None
    assert doc["payload"]["vector"] == [1.5, 2.0]
    assert doc["payload"]["flag"] is True
    assert doc["tool_version"] == __version__
    assert list(doc)[:4] == ["schema_version", "tool_version", "command", "action"]


def test_csv_with_comments():
    text = CsvEmitter({"csv": {"comments": True}}).render(sample_report())
    lines = text.splitlines()
    assert lines[0] == f"# schema_version={sample_report().schema_version} tool_version={__version__} command=gaps action=trace"
    assert lines[1] == "# seeds=cartan:2"
    assert lines[2:] == ["n,x,y,z", "0,0.10000000000000001,-2/3,"]


def test_csv_without_comments():
    text = CsvEmitter({"csv": {"comments": False}}).render(sample_report())
    assert text == "n,x,y,z\n0,0.10000000000000001,-2/3,\n"


def test_csv_without_rows():
    report = Report("rep", "check", {"relations": True})
    assert CsvEmitter({"csv": {"comments": False}}).render(report) == ""


def test_emit_to_a_file(tmp_path):
    path = tmp_path / "nested" / "out.json"
    JsonEmitter({}).emit(sample_report(), str(path))
    assert json.loads(path.read_text())["command"] == "gaps"


def test_emit_to_an_unwritable_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(DomainError):
        JsonEmitter({}).emit(sample_report(), str(blocker / "out.json"))


def test_unknown_emitter():
    assert isinstance(Emitter.init("csv", {}), CsvEmitter)
    with pytest.raises(UsageError):
        Emitter.init("xml", {})
