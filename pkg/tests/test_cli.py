import json
import shutil
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from petinduce import pipeline
from petinduce.cli import main

INDUCE_BETA0 = ["induce", "--pet", "builtin:R0e2", "--partition", "builtin:P0", "--halfspace", "1,0,-1"]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestInduce:
    def test_beta0(self, capsys, expected):
        code, out, _ = run(INDUCE_BETA0, capsys)
        assert code == 0
        obj = json.loads(out)
        assert len(obj["return_words"]) == 28
        assert obj["substitution"] == expected.morphisms["beta0"].to_json()

    def test_files(self, tmp_path, capsys):
        pet = tmp_path / "r0e2.json"
        part = tmp_path / "p0.json"
        pet.write_text(json.dumps(pipeline.r0_generators()[1].to_json()))
        shutil.copy(pipeline.data_dir() / "p0.json", part)
        out = tmp_path / "res.json"
        svg = tmp_path / "p1.svg"
        code, _, _ = run(["induce", "--pet", str(pet), "--partition", str(part), "--halfspace", "1,0,-1",
                          "--out", str(out), "--svg", str(svg)], capsys)
        assert code == 0
        assert len(json.loads(out.read_text())["partition"]["atoms"]) == 30
        ET.fromstring(svg.read_text())

    def test_parse_error(self, capsys):
        code, _, err = run(["induce", "--pet", "builtin:R0e2", "--halfspace", "1//2,0,-1"], capsys)
        assert code == 2
        assert "position 2" in err and "^" in err

    def test_iteration_cap(self, capsys):
        code, _, err = run(INDUCE_BETA0 + ["--max-iter", "1"], capsys)
        assert code == 3

    def test_geometry_error(self, capsys):
        code, _, _ = run(["induce", "--pet", "builtin:R0e2", "--halfspace", "1,0,0"], capsys)
        assert code == 4

    def test_bad_json(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(["induce", "--pet", str(bad), "--halfspace", "1,0,-1"], capsys)
        assert code == 2 and "invalid JSON" in err

    def test_missing_file(self, capsys):
        code, _, _ = run(["induce", "--pet", "/nonexistent.json", "--halfspace", "1,0,-1"], capsys)
        assert code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(INDUCE_BETA0 + ["--bogus"])
        assert info.value.code == 2

    def test_deterministic(self, capsys):
        _, a, _ = run(INDUCE_BETA0, capsys)
        _, b, _ = run(INDUCE_BETA0, capsys)
        assert a == b


class TestRender:
    def test_p0(self, capsys):
        code, out, _ = run(["render", "builtin:P0"], capsys)
        assert code == 0
        root = ET.fromstring(out)
        assert len(root.findall(".//{http://www.w3.org/2000/svg}text")) == 20


class TestJrVerify:
    def test_default(self, capsys):
        code, out, _ = run(["jr-verify", "--desub-samples", "5"], capsys)
        assert code == 0
        table_lines = out.split("checks:")[0].splitlines()[1:]
        assert len(table_lines) == 12 and all(l.strip().startswith("PASS") for l in table_lines)
        assert "shear" in out

    def test_skip_shear(self, capsys):
        code, out, _ = run(["jr-verify", "--skip-shear", "--desub-samples", "0"], capsys)
        assert code == 0
        assert "shear" not in out

    def test_corrupted_beta0(self, tmp_path, capsys):
        raw = json.loads((pipeline.data_dir() / "expected_tables.json").read_text())
        raw["beta0"]["images"]["0"]["entries"][0] = 5
        path = tmp_path / "expected.json"
        path.write_text(json.dumps(raw))
        code, out, err = run(["jr-verify", "--skip-shear", "--desub-samples", "0", "--expected", str(path)],
                             capsys)
        assert code == 1
        assert "mismatch: beta0" in err
        assert "FAIL  beta0" in out

    def test_json(self, capsys):
        code, out, _ = run(["jr-verify", "--skip-shear", "--desub-samples", "0", "--format", "json"], capsys)
        assert code == 0 and json.loads(out)["ok"]


class TestSturmian:
    def test_appendix(self, capsys):
        code, out, _ = run(["sturmian", "186/55+3/55*phi", "7"], capsys)
        assert code == 0
        assert json.loads(out)["digits"] == [3, 2, 7, 1, 5, 1, 5]

    def test_rational(self, capsys):
        code, _, err = run(["sturmian", "2", "3"], capsys)
        assert code == 5
        assert "[2]" in err

    def test_parse(self, capsys):
        code, _, _ = run(["sturmian", "phi+", "3"], capsys)
        assert code == 2


class TestOrbit:
    def test_window(self, capsys):
        code, out, _ = run(["orbit", "--pet", "builtin:R0e1", "--pet", "builtin:R0e2", "--partition",
                            "builtin:P0", "--point", "1/3,1/7", "--window", "0:5,0:4", "--format", "json"], capsys)
        assert code == 0
        obj = json.loads(out)
        assert len(obj["config"]) == 5 and len(obj["config"][0]) == 4

    def test_boundary(self, capsys):
        code, _, _ = run(["orbit", "--pet", "builtin:R0e1", "--pet", "builtin:R0e2", "--point", "0,0"], capsys)
        assert code == 6

    def test_bad_window(self, capsys):
        code, _, _ = run(["orbit", "--pet", "builtin:R0e1", "--point", "1/3,1/7", "--window", "0-5"], capsys)
        assert code == 2


def test_console_entry_point():
    exe = shutil.which("petinduce")
    cmd = [exe] if exe else [sys.executable, "-m", "petinduce"]
    out = subprocess.run(cmd + ["sturmian", "phi", "3", "--format", "text"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "digits: 1 1 1" in out.stdout
