import json
import subprocess
import sys

import pytest

from coxsort.cli import RunConfig, UsageError, main, parse_config
from coxsort.convexity import format_set_system, line_convex_geometry
from coxsort.coxeter import CoxeterMatrix, preset_matrix


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_config_examples():
    cfg = parse_config(["sort", "--type", "A4", "--word", "1234321232", "--element", "41532"])
    assert cfg == RunConfig(command="sort", type_name="A4", word="1234321232", element="41532")
    cfg = parse_config(["poset", "--type", "I2:4", "--word", "1212", "--format", "dot"])
    assert cfg.format == "dot" and cfg.command == "poset"
    assert parse_config(["sortables", "--type", "A3", "--census"]).census


def test_parse_config_errors():
    with pytest.raises(SystemExit):
        parse_config(["frobnicate"])
    with pytest.raises(SystemExit):
        parse_config(["sort", "--type", "A3", "--matrix", "m.txt", "--word", "12", "--subword", "1"])
    with pytest.raises(SystemExit):
        parse_config(["sort", "--type", "A3", "--element", "1234"])
    with pytest.raises(UsageError):
        parse_config(["sortables", "--type", "A3", "--census", "--coxeter-word", "123"])


def test_sort_table(capsys):
    code, out, _ = run(["sort", "--type", "A4", "--word", "1234321232", "--element", "41532"], capsys)
    assert code == 0
    assert out == "{2,3,4,6,7,9}\n(2,3,4,2,1,3)\n"
    code, out, _ = run(["sort", "--type", "A4", "--word", "1,2,3,4,3,2,1,2,3,2", "--subword", "2,3,4,6,7,9",
                        "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out) == {"index_set": [2, 3, 4, 6, 7, 9], "word": [2, 3, 4, 2, 1, 3]}


def test_sort_outside_w_omega(capsys):
    code, out, err = run(["sort", "--type", "A4", "--word", "1234", "--element", "41532"], capsys)
    assert code != 0
    assert "not a subword of" in err
    assert out == ""


def test_malformed_inputs(capsys):
    assert run(["sort", "--type", "A3", "--word", "1x2", "--subword", "1"], capsys)[0] == 2
    assert run(["sort", "--type", "Q9", "--word", "12", "--subword", "1"], capsys)[0] == 2
    assert run(["sort", "--type", "B3", "--word", "12", "--element", "2134"], capsys)[0] == 2
    assert run(["poset", "--type", "A2", "--word", "12" * 13], capsys)[0] == 2


def test_poset_dot_and_json(capsys):
    code, out, _ = run(["poset", "--type", "I2:4", "--word", "1212", "--format", "dot"], capsys)
    assert code == 0 and out.startswith("digraph") and out.count("->") == 12
    code, out2, _ = run(["poset", "--type", "I2:4", "--word", "1212", "--format", "dot"], capsys)
    assert out2 == out
    code, out, _ = run(["poset", "--type", "I2:4", "--word", "1212", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and len(doc["elements"]) == 8 and all(doc["checks"].values())


def test_poset_truncation(capsys):
    code, out, _ = run(["poset", "--type", "I2:inf", "--word", "12", "--truncate", "6"], capsys)
    assert code == 0
    assert "elements: 12" in out and "intervals_supersolvable: yes" in out
    code, _, err = run(["poset", "--type", "I2:3", "--word", "12", "--truncate", "4"], capsys)
    assert code == 2 and "not reduced" in err


def test_check_s4(capsys):
    code, out, _ = run(["check", "--type", "A3", "--word", "123212", "--samples", "40"], capsys)
    assert code == 0
    assert "FAIL" not in out
    assert "sorting_covers: 46" in out


def test_sortables(capsys):
    code, out, _ = run(["sortables", "--type", "B3", "--coxeter-word", "312"], capsys)
    assert code == 0 and "sortables: 20" in out
    code, out, _ = run(["sortables", "--type", "A3", "--census", "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and len(doc["classes"]) == 2
    code, out, _ = run(["sortables", "--type", "A3", "--census", "--format", "dot"], capsys)
    assert code == 0 and out.count("digraph") == 2
    code, _, _ = run(["sortables", "--type", "A3", "--coxeter-word", "12"], capsys)
    assert code == 2


def test_matrix_file(tmp_path, capsys):
    path = tmp_path / "b3.txt"
    path.write_text(CoxeterMatrix(preset_matrix("B3")).to_text())
    code, out, _ = run(["sortables", "--matrix", str(path), "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["count"] == 20


def test_convexity(tmp_path, capsys):
    path = tmp_path / "line.txt"
    path.write_text(format_set_system(line_convex_geometry(4)))
    code, out, _ = run(["convexity", "--file", str(path)], capsys)
    assert code == 0 and "PASS join_distributive" in out
    code, out, _ = run(["convexity", "--file", str(path), "--order-search"], capsys)
    assert code == 1 and "FAIL supersolvable_some_order" in out
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n-\n1\n2\n")
    code, out, _ = run(["convexity", "--file", str(bad), "--format", "json"], capsys)
    assert code == 1 and json.loads(out)["checks"]["antimatroid"] is False
    code, _, _ = run(["convexity", "--file", str(tmp_path / "missing.txt")], capsys)
    assert code == 2


def test_out_path(tmp_path, capsys):
    target = tmp_path / "order.json"
    code, out, _ = run(["poset", "--type", "A2", "--word", "121", "--format", "json", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert len(json.loads(target.read_text())["elements"]) == 6


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coxsort", "sort", "--type", "A4", "--word", "1234321232", "--element", "41532"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["{2,3,4,6,7,9}", "(2,3,4,2,1,3)"]
