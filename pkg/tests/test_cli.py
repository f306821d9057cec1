import json

import pytest

from localizability import (
    GeneratorConfig,
    generate_erdos_renyi,
    generate_unit_disk,
    generate_unit_disk_for_degree,
)
from localizability.cli import main
from localizability.formats import format_edge_list, load_network, save_network

from conftest import complete_network


@pytest.fixture
def k4_file(tmp_path, k4):
    path = tmp_path / "k4.txt"
    path.write_text(format_edge_list(k4))
    return path


def test_detect_text(k4_file, capsys):
    assert main(["detect", str(k4_file), "--mode", "bll"]) == 0
    out, err = capsys.readouterr()
    assert "localizable: 0 1 2 3" in out
    assert "localizable agents: 1/1" in err


def test_detect_json_to_file(k4_file, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["detect", str(k4_file), "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["localizable"] == [0, 1, 2, 3]
    assert doc["mode"] == "BLL"
    assert "passes: 1" in capsys.readouterr().out


def test_detect_two_anchors(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text(format_edge_list(complete_network(6, {0, 1})))
    assert main(["detect", str(path), "--mode", "nll"]) == 0
    assert "localizable agents: 0" in capsys.readouterr().err


def test_detect_tp(k4_file, capsys):
    assert main(["detect", str(k4_file), "--mode", "tp", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["mode"] == "TP"


def test_parse_failure_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("anchors: 0\n0 1\nnot an edge\n")
    assert main(["detect", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err
    assert main(["detect", str(tmp_path / "missing.txt")]) == 2


def test_usage_errors_exit_64(k4_file):
    with pytest.raises(SystemExit) as info:
        main(["detect", str(k4_file), "--bogus"])
    assert info.value.code == 64
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 64
    assert main(["detect", str(k4_file), "--dimension", "1"]) == 64


def test_gen_round_trip(tmp_path):
    out = tmp_path / "net.json"
    assert main(["gen", "--model", "disk", "--n", "30", "--anchors", "4", "--radius", "0.3", "--seed", "5", "--out", str(out)]) == 0
    net = load_network(out)
    assert net == generate_unit_disk(GeneratorConfig(30, 4, 0.3, seed=5))
    txt = tmp_path / "gnp.txt"
    assert main(["gen", "--model", "gnp", "--n", "12", "--p", "0.4", "--seed", "2", "--out", str(txt)]) == 0
    assert load_network(txt) == generate_erdos_renyi(12, 3, 0.4, seed=2)


def test_gen_stdout(capsys):
    assert main(["gen", "--n", "5", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["node_count"] == 5


def test_bll_count_not_above_nll_on_n200(tmp_path, capsys):
    net, _ = generate_unit_disk_for_degree(200, 8, 10, seed=3)
    path = tmp_path / "n200.json"
    save_network(net, path)
    counts = {}
    for mode in ("bll", "nll"):
        report = tmp_path / f"{mode}.json"
        assert main(["detect", str(path), "--mode", mode, "--format", "json", "--out", str(report)]) == 0
        counts[mode] = len(json.loads(report.read_text())["localizable"])
    assert counts["bll"] <= counts["nll"]


def test_check_random_trials(capsys):
    assert main(["check", "--trials", "15", "--seed", "100"]) == 0
    assert "15 instances passed" in capsys.readouterr().out


def test_check_single_file(k4_file, capsys):
    assert main(["check", str(k4_file)]) == 0
    assert "ok" in capsys.readouterr().out


def test_check_reports_counterexample(monkeypatch, capsys):
    import localizability.cli as cli

    monkeypatch.setattr(cli, "check_instance", lambda net: ["forced failure"])
    assert main(["check", "--trials", "3", "--seed", "9"]) == 1
    out = capsys.readouterr().out
    assert "counterexample at seed 9" in out
    assert '"node_count"' in out


@pytest.mark.parametrize("what, head", [("g", "graph G {"), ("ga", "graph GA {"), ("gprime", "digraph Gprime {")])
def test_export(k4_file, tmp_path, what, head):
    out = tmp_path / f"{what}.dot"
    assert main(["export", str(k4_file), "--what", what, "--out", str(out)]) == 0
    assert out.read_text().startswith(head)


def test_bench(capsys):
    assert main(["bench", "--n", "60", "--degree", "8", "--anchors", "4", "--trials", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 3
    assert lines[0].split()[0] == "seed"
