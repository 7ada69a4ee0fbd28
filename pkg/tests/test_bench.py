from firecut.bench import bench_grid, bench_rayfree, format_rows
from firecut.cli import main


def test_bench_grid_size_law_holds():
    rows = bench_grid(1, 4)
    assert len(rows) == 4
    assert all(r["law_ok"] for r in rows)
    # a lone ignition flips to containable exactly at budget 4
    assert [r["contained"] for r in rows] == [False, False, False, True]
    text = format_rows(rows)
    assert "nodes_expected" in text


def test_bench_rayfree_runs():
    rows = bench_rayfree(sizes=(6, 8), seed=2)
    assert len(rows) == 2


def test_bench_cli(capsys):
    assert main(["bench", "grid", "--min-budget", "1",
                 "--max-budget", "3"]) == 0
    out = capsys.readouterr().out
    assert "law_ok" in out and "True" in out
