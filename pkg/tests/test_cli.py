import json

import pytest

from snarklab import cli
from snarklab.constructions import petersen, triangle_expansion
from snarklab.graphio import read_graph6, write_graph6


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture()
def pet_file(tmp_path):
    p = tmp_path / "pet.g6"
    p.write_text(write_graph6(petersen()) + "\n")
    return p


def test_construct_writes_graph_and_sidecar(tmp_path, capsys):
    out = tmp_path / "g.g6"
    code, _, _ = run(["construct", "petersen", "--out", str(out)], capsys)
    assert code == 0
    g = read_graph6(out.read_text().strip())
    assert g.n() == 10
    side = json.loads((tmp_path / "g.g6.json").read_text())
    assert side["family"] == "petersen"
    assert side["order"] == 10 and side["size"] == 15


def test_construct_network_sidecar(capsys):
    code, out, err = run(["construct", "P3"], capsys)
    assert code == 0
    side = json.loads(err.strip().splitlines()[-1])
    assert len(side["terminals"]) == 3
    assert side["connectors"][0]["name"] == "triple"


def test_construct_usage_errors(capsys):
    code, _, err = run(["construct", "nosuch"], capsys)
    assert code == 2 and "unknown family" in err
    code, _, err = run(["construct", "flower"], capsys)
    assert code == 2 and "parameters" in err
    code, _, err = run(["construct", "flower", "x"], capsys)
    assert code == 2


def test_analyze_json_record(pet_file, capsys):
    code, out, _ = run(["analyze", str(pet_file)], capsys)
    assert code == 0
    rec = json.loads(out.strip())
    assert rec["order"] == 10
    assert rec["girth"] == 5
    assert rec["zeta"] == "5"
    assert rec["colourable"] is False
    assert rec["rho"] == 2
    assert rec["omega"] == 2
    assert rec["ratio"] == "5"
    assert rec["five_circuit_profile"] == [0, 0, 0, 0, 0, 0, 10]
    assert rec["ratio_bound"]["exempt"] is True
    assert "timings" not in rec


def test_analyze_text_format_and_timings(pet_file, capsys):
    code, out, _ = run(
        ["analyze", str(pet_file), "--format", "text"], capsys
    )
    assert code == 0
    assert "omega=2" in out and "zeta=5" in out
    code, out, _ = run(["analyze", str(pet_file), "--timings"], capsys)
    rec = json.loads(out.strip())
    assert "timings" in rec and "omega" in rec["timings"]


def test_analyze_skip(pet_file, capsys):
    code, out, _ = run(["analyze", str(pet_file), "--skip", "omega"], capsys)
    rec = json.loads(out.strip())
    assert "omega" not in rec and rec["ratio"] is None


def test_analyze_missing_file(tmp_path, capsys):
    code, _, err = run(["analyze", str(tmp_path / "nope.g6")], capsys)
    assert code == 3


def test_analyze_parse_error_continues(tmp_path, capsys):
    p = tmp_path / "bad.g6"
    p.write_text("!!notgraph6!!\n" + write_graph6(petersen()) + "\n")
    code, out, err = run(["analyze", str(p)], capsys)
    assert code == 0
    assert "parse error" in err
    assert json.loads(out.strip())["order"] == 10


def test_analyze_cache_byte_identical(pet_file, tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    args = ["analyze", str(pet_file), "--cache", str(cache)]
    code1, out1, _ = run(args, capsys)
    assert code1 == 0 and cache.exists()
    assert len(cache.read_text().splitlines()) == 1
    code2, out2, _ = run(args, capsys)
    assert code2 == 0
    assert out2 == out1  # cached rerun is byte-identical
    assert len(cache.read_text().splitlines()) == 1  # append-only, no dupes


def test_cache_corrupt_line_dropped(pet_file, tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    cache.write_text("{not json\n")
    code, out, err = run(
        ["analyze", str(pet_file), "--cache", str(cache)], capsys
    )
    assert code == 0
    assert "corrupt cache entry dropped" in err
    assert json.loads(out.strip())["order"] == 10


def test_config_precedence(pet_file, tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "snarklab.cfg"
    cfg.write_text("# comment\nformat=text\n")
    base = ["--config", str(cfg), "analyze", str(pet_file)]
    code, out, _ = run(base, capsys)
    assert code == 0 and out.startswith("key=")  # config file applies
    monkeypatch.setenv("SNARKLAB_FORMAT", "json")
    code, out, _ = run(base, capsys)
    assert code == 0 and out.startswith("{")  # env beats config
    code, out, _ = run(base + ["--format", "text"], capsys)
    assert code == 0 and out.startswith("key=")  # flag beats env


def test_reduce_roundtrip(tmp_path, capsys):
    g = triangle_expansion(petersen(), 0)
    src = tmp_path / "in.g6"
    src.write_text(write_graph6(g) + "\n")
    out = tmp_path / "out.g6"
    code, _, _ = run(
        ["reduce", str(src), "--rule", "girth4", "--out", str(out)], capsys
    )
    assert code == 0
    assert read_graph6(out.read_text().strip()).n() == 10
    trace = json.loads((tmp_path / "out.g6.trace.json").read_text())
    assert [s["rule"] for s in trace["steps"]] == ["girth3-contract"]


def test_reduce_rejects_colourable(tmp_path, capsys):
    src = tmp_path / "k4.g6"
    src.write_text("C~\n")
    code, _, err = run(["reduce", str(src)], capsys)
    assert code == 1


def test_batch_with_cache(tmp_path, capsys):
    d = tmp_path / "graphs"
    d.mkdir()
    (d / "a.g6").write_text(write_graph6(petersen()) + "\n")
    (d / "b.g6").write_text("C~\n")
    (d / "ignored.xyz").write_text("junk\n")
    cache = tmp_path / "c.jsonl"
    args = ["batch", str(d), "--cache", str(cache), "--jobs", "1"]
    code, out1, _ = run(args, capsys)
    assert code == 0
    lines = out1.strip().splitlines()
    assert len(lines) == 3  # two records + summary
    summary = json.loads(lines[-1])["summary_ratio_by_zeta"]
    assert summary["5"]["count"] == 1 and summary["5"]["mean"] == "5"
    code, out2, _ = run(args, capsys)
    assert code == 0 and out2 == out1  # resume from cache, identical output


def test_batch_resume_requires_cache(tmp_path, capsys):
    d = tmp_path / "graphs"
    d.mkdir()
    code, _, err = run(["batch", str(d), "--resume"], capsys)
    assert code == 2 and "requires a cache" in err


def test_batch_bad_dir(tmp_path, capsys):
    code, _, _ = run(["batch", str(tmp_path / "nodir")], capsys)
    assert code == 3


def test_usage_exit_code(capsys):
    assert cli.main(["nosuchcommand"]) == 2
