import json

from monmap.cli import main
from monmap.verify import SUITES


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStructureCommand:
    def test_fixture(self, capsys):
        code, out, _ = run(capsys, "structure", "--map", "klein")
        assert code == 0
        data = json.loads(out)
        assert data["faces"] == 1 and data["genus"] == {"num": 1, "den": 1}
        assert data["orientable"] is False

    def test_file_input(self, capsys, tmp_path, klein):
        from monmap.maps import map_to_json_obj
        path = tmp_path / "m.json"
        path.write_text(json.dumps(map_to_json_obj(klein)))
        code, out, _ = run(capsys, "structure", "--map", str(path))
        assert code == 0
        assert json.loads(out)["euler_characteristic"] == 0


class TestMonCommand:
    def test_klein(self, capsys):
        code, out, _ = run(capsys, "mon", "--map", "klein")
        assert code == 0
        data = json.loads(out)
        assert data["mon_top"] == {"num": 2, "den": 3}
        assert data["mon"][0] == {"num": 1, "den": 6}
        assert data["mon"][2] == {"num": 2, "den": 3}


class TestEnumerateCommand:
    def test_jsonl_output(self, capsys, tmp_path):
        out_path = tmp_path / "maps.jsonl"
        code, _, err = run(capsys, "enumerate", "--n", "2",
                           "--family", "one-face-conservative",
                           "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert len(lines) == 3
        assert all(json.loads(line)["root"] == 1 for line in lines)

    def test_involutions_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3",
                           "--family", "involutions")
        assert code == 0
        assert len(out.splitlines()) == 15

    def test_guard_error_surfaces(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "4", "--family", "all")
        assert code == 2
        assert "exceeds the guard" in err

    def test_sqrt2_rejected_for_chtop(self, capsys):
        code, _, err = run(capsys, "chtop", "--n", "1", "--P", "1",
                           "--Q", "1", "--A", "sqrt2")
        assert code == 2
        assert "rational A" in err


class TestBijectionCommand:
    def test_apply_and_invert(self, capsys):
        history = "[[1,5],[2,4],[3,6]]"
        code, out, _ = run(capsys, "bijection", "apply", "--map", "klein",
                           "--history", history)
        assert code == 0
        data = json.loads(out)
        assert data["checks"]["output_orientable"] is True
        assert data["checks"]["graph_class_preserved"] is True
        assert sorted(map(tuple, data["twists"])) == [(1, 5), (2, 4)]


class TestChtopCommand:
    def test_reference_point(self, capsys):
        code, out, _ = run(capsys, "chtop", "--n", "2", "--P", "1",
                           "--Q", "4", "--A", "2")
        assert code == 0
        data = json.loads(out)
        assert data["oriented_sum"] == {"num": 6, "den": 1}
        assert data["one_face_sum_reconciled"] == {"num": 6, "den": 1}
        assert data["closed_form_top"] == {"num": 6, "den": 1}
        assert data["gamma"] == {"num": -3, "den": 2}


class TestJackAndCh:
    def test_jack_table(self, capsys):
        code, out, _ = run(capsys, "jack", "--lambda", "2,1",
                           "--alpha", "2")
        assert code == 0
        data = json.loads(out)
        assert data["theta"]["1,1,1"] == {"num": 1, "den": 1}

    def test_ch_value(self, capsys):
        code, out, _ = run(capsys, "ch", "--pi", "2", "--lambda", "2,2",
                           "--A", "2")
        assert code == 0
        assert json.loads(out)["value"] == {"num": 6, "den": 1}

    def test_ch_sqrt2(self, capsys):
        code, out, _ = run(capsys, "ch", "--pi", "2", "--lambda", "2,2",
                           "--A", "sqrt2")
        assert code == 0
        value = json.loads(out)["value"]
        assert value["sqrt2_coeff"] == {"num": 2, "den": 1}


class TestVerifyCommand:
    def test_pass_exit_zero(self, capsys):
        code, out, err = run(capsys, "verify", "mon-examples",
                             "--format", "json")
        assert code == 0
        assert json.loads(out)["passed"] is True
        assert "PASS" in err

    def test_failure_exit_one(self, capsys, monkeypatch):
        from monmap.verify import Check, Report

        def broken():
            return Report("mon-examples", {}, [
                Check("deliberately failing", False, {"value": "0"})])

        monkeypatch.setitem(SUITES, "mon-examples", broken)
        code, out, err = run(capsys, "verify", "mon-examples",
                             "--format", "json")
        assert code == 1
        assert "first counterexample" in err
        assert "deliberately failing" in err

    def test_output_file(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, _, _ = run(capsys, "verify", "counting", "--format", "json",
                         "--out", str(out_path))
        assert code == 0
        assert json.loads(out_path.read_text())["passed"] is True
