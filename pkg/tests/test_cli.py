import pytest

from vulnk import TSV_HEADER, serialize_graph, synth_graph
from vulnk.cli import main


@pytest.fixture
def graph_files(tmp_path):
    g = synth_graph("random-dag", 8, 12, seed=7)
    nodes_text, edges_text = serialize_graph(g)
    nodes = tmp_path / "nodes.tsv"
    edges = tmp_path / "edges.tsv"
    nodes.write_text(nodes_text)
    edges.write_text(edges_text)
    return str(nodes), str(edges)


def _run(argv):
    return main(argv)


def test_synth_then_topk_all_methods(tmp_path):
    nodes = tmp_path / "n.tsv"
    edges = tmp_path / "e.tsv"
    assert _run([
        "synth", "--kind", "power-law", "--n", "50", "--m", "120", "--seed", "3",
        "--out-nodes", str(nodes), "--out-edges", str(edges),
    ]) == 0
    for method in ("n", "sn", "sr", "bsr", "bsrbk"):
        out = tmp_path / f"out-{method}.tsv"
        code = _run([
            "topk", "--nodes", str(nodes), "--edges", str(edges),
            "--method", method, "--k", "5", "--seed", "2",
            "--samples", "2000", "--out", str(out),
        ])
        assert code == 0
        text = out.read_text()
        assert TSV_HEADER in text
        assert len([l for l in text.splitlines() if not l.startswith("#") and l and "rank" not in l]) == 5


def test_topk_reruns_byte_identical(graph_files, tmp_path):
    nodes, edges = graph_files
    outs = []
    for name in ("a.tsv", "b.tsv"):
        out = tmp_path / name
        assert _run([
            "topk", "--nodes", nodes, "--edges", edges,
            "--method", "bsrbk", "--k", "3", "--seed", "9", "--out", str(out),
        ]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_oracle_and_truth_and_eval(graph_files, tmp_path, capsys):
    nodes, edges = graph_files
    pred = tmp_path / "pred.tsv"
    truth = tmp_path / "truth.tsv"
    assert _run(["oracle", "--nodes", nodes, "--edges", edges,
                 "--k", "3", "--out", str(pred)]) == 0
    assert _run(["truth", "--nodes", nodes, "--edges", edges,
                 "--k", "3", "--samples", "5000", "--out", str(truth)]) == 0
    # truth vs itself must score a perfect 1.0
    assert _run(["eval", "--pred", str(truth), "--truth", str(truth)]) == 0
    assert capsys.readouterr().out.strip() == "1.0000"
    assert _run(["eval", "--pred", str(pred), "--truth", str(truth)]) == 0
    score = float(capsys.readouterr().out)
    assert 0.0 <= score <= 1.0


def test_bounds_output(graph_files, tmp_path):
    nodes, edges = graph_files
    out = tmp_path / "bounds.tsv"
    assert _run(["bounds", "--nodes", nodes, "--edges", edges,
                 "--z", "2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "node\tp_l\tp_u"
    assert len(lines) == 9
    for line in lines[1:]:
        _, lo, hi = line.split("\t")
        assert 0.0 <= float(lo) <= float(hi) <= 1.0


def test_bench_command(graph_files, tmp_path):
    nodes, edges = graph_files
    out = tmp_path / "bench.tsv"
    csv = tmp_path / "bench.csv"
    assert _run(["bench", "--nodes", nodes, "--edges", edges,
                 "--methods", "n,bsrbk", "--k", "2", "--samples", "1000",
                 "--out", str(out), "--csv", str(csv)]) == 0
    assert out.read_text().startswith("method\tk")
    assert len(csv.read_text().splitlines()) == 3


def test_percentage_k(graph_files, tmp_path):
    nodes, edges = graph_files
    out = tmp_path / "pct.tsv"
    assert _run(["topk", "--nodes", nodes, "--edges", edges,
                 "--method", "sn", "--k", "25%", "--out", str(out)]) == 0
    rows = [l for l in out.read_text().splitlines()
            if l and not l.startswith("#") and not l.startswith("rank")]
    assert len(rows) == 2  # 25% of 8 nodes


def test_validation_error_exit_code(tmp_path, capsys):
    nodes = tmp_path / "n.tsv"
    edges = tmp_path / "e.tsv"
    nodes.write_text("A\t1.5\n")
    edges.write_text("")
    code = _run(["topk", "--nodes", str(nodes), "--edges", str(edges),
                 "--method", "n", "--k", "1"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_exit_code(tmp_path, capsys):
    code = _run(["topk", "--nodes", str(tmp_path / "no.tsv"),
                 "--edges", str(tmp_path / "no2.tsv"),
                 "--method", "n", "--k", "1"])
    assert code == 2
    capsys.readouterr()


def test_invalid_k_exit_code(graph_files, capsys):
    nodes, edges = graph_files
    assert _run(["topk", "--nodes", nodes, "--edges", edges,
                 "--method", "n", "--k", "99"]) == 2
    capsys.readouterr()
