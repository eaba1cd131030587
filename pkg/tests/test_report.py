import csv

from qgimli.cli import main
from qgimli.gimli_ref import Params
from qgimli.plotting import render_sweep
from qgimli.report import depth_bound, stats, sweep, write_csv


def test_depth_bound_formula():
    assert depth_bound(24, 32) == 3846
    assert depth_bound(5, 8) == 5 * 8 * 5 + 2


def test_stats_without_reference():
    doc = stats(Params(4, 8))
    assert "reference" not in doc
    assert doc["report"]["width"] == 96


def test_sweep_csv_and_figures(tmp_path):
    rows = sweep([1, 4, 8], [8, 16], lowered_t_depth=True)
    assert len(rows) == 6
    assert all(r.counts_match_formula and r.depth <= r.depth_bound for r in rows)
    assert all(r.t_depth_lowered > 0 for r in rows)
    path = tmp_path / "s.csv"
    write_csv(rows, path)
    with open(path) as fh:
        read = list(csv.DictReader(fh))
    assert len(read) == 6 and read[0]["rounds"] == "1"
    figs = render_sweep(rows, tmp_path / "figs")
    assert len(figs) == 2
    for f in figs:
        with open(f, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"


def test_cli_sweep(tmp_path, capsys):
    out = tmp_path / "sw"
    assert main(["sweep", "--rounds-list", "4", "8", "--word-lens", "8", "--out-dir", str(out)]) == 0
    printed = capsys.readouterr().out.split()
    assert str(out / "sweep.csv") in printed
    assert (out / "depth_vs_rounds.png").exists()
