from __future__ import annotations

import json

import pytest

from index2poly.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_trace_closed_face(capsys):
    rc, out, _ = run(capsys, "trace", "dodecahedron", "2", "[hl,hl,hl,hl]")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "seed: dodecahedron  lengths: 2  word: [hl,hl,hl,hl]"
    assert lines[1] == "start: 0 -> 2"
    assert lines[2] == "closed: yes  period: 5  planar: yes"
    assert lines[3] == "boundary: 0 2 1 4 5"


def test_trace_open_walk_exits_nonzero(capsys):
    rc, out, _ = run(capsys, "trace", "dodecahedron", "1,4", "[r,r,l,l]")
    assert rc == 1
    assert "closed: no  diagnosis: VertexRevisit" in out
    assert "walk: 0 1 12 8 15 19 1" in out


def test_trace_can_export_the_face(capsys, tmp_path):
    target = tmp_path / "pentagon.off"
    rc, out, _ = run(
        capsys, "trace", "dodecahedron", "2", "[hl,hl,hl,hl]", "--off", str(target)
    )
    assert rc == 0
    assert target.read_text().splitlines()[1] == "5 1 5"


def test_trace_rejects_unknown_inputs(capsys):
    rc, _, err = run(capsys, "trace", "octahedron", "1", "[r,r]")
    assert rc == 2 and err.startswith("error: unknown seed")
    rc, _, err = run(capsys, "trace", "cube", "7", "[r,r]")
    assert rc == 2 and "no length configuration" in err
    rc, _, err = run(capsys, "trace", "cube", "1,2", "[x,y]")
    assert rc == 2 and "unknown direction symbol" in err


def test_enumerate_filtered_text_report(capsys):
    rc, out, _ = run(
        capsys, "enumerate", "--seed", "dodecahedron", "--lengths", "2",
        "--only-accepted",
    )
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "index2poly-report 1"
    assert "accepted: 2" in lines
    assert any(l.startswith("N12.1 | dodecahedron | 2 | [hl,f]") for l in lines)
    assert any(l.startswith("R9.16 | dodecahedron | 2 | [f,f] & [hl,hl]") for l in lines)
    assert "[rejections]" not in out


def test_enumerate_json(capsys):
    rc, out, _ = run(
        capsys, "enumerate", "--seed", "cuboctahedron", "--json"
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["records"] == []
    assert len(payload["rejections"]) == 48


def test_enumerate_writes_report_and_figures(capsys, tmp_path):
    rc, out, _ = run(
        capsys, "enumerate", "--seed", "icosidodecahedron", "--lengths", "2d",
        "--out", str(tmp_path),
    )
    assert rc == 0
    assert "wrote" in out and "2 figure(s)" in out
    assert (tmp_path / "report.txt").exists()
    assert sorted(p.name for p in tmp_path.glob("*.png")) == [
        "01-r6-2s.png",
        "02-n20-1s.png",
    ]


def test_dual_by_label(capsys):
    rc, out, _ = run(capsys, "dual", "R9.16", "--kind", "both")
    assert rc == 0
    assert out.splitlines() == [
        "R9.16  petrie-dual -> N12.1  (f-vector (20, 60, 30))",
        "R9.16  antipodal-dual -> N30.11*  (f-vector (20, 60, 12))",
    ]


def test_dual_by_row_number(capsys):
    rc, out, _ = run(capsys, "dual", "3", "--kind", "petrie")
    assert rc == 0
    assert out.splitlines() == ["N12.1  petrie-dual -> R9.16  (f-vector (20, 60, 24))"]


def test_dual_rejects_unknown_selections(capsys):
    for selector in ("R0.0", "99"):
        rc, _, err = run(capsys, "dual", selector)
        assert rc == 2
        assert "no accepted record matches" in err


def test_export_writes_named_meshes(capsys, tmp_path):
    rc, out, _ = run(
        capsys, "export", "--seed", "icosidodecahedron", "--lengths", "d",
        "--out", str(tmp_path), "--exact",
    )
    assert rc == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == [
        "01-n12-1s.off",
        "01-n12-1s.off.exact",
        "02-r4-2s.off",
        "02-r4-2s.off.exact",
    ]
    assert "[N12.1* {6,4}_5]" in out
    assert (tmp_path / "01-n12-1s.off").read_text().splitlines()[1] == "30 20 60"


def test_verify_full_run(capsys):
    rc, out, _ = run(capsys, "verify")
    assert rc == 0
    assert "accepted: 10  rejected: 1875" in out
    assert out.rstrip().endswith("verdict: ok")
    assert "FAIL" not in out


def test_verify_filtered_run_skips_census_wide_checks(capsys):
    rc, out, _ = run(capsys, "verify", "--seed", "cuboctahedron")
    assert rc == 0
    assert "census-wide checks skipped" in out
    assert "petrie-pairing" not in out
    assert out.rstrip().endswith("verdict: ok")


def test_exhaustive_flag_is_accepted(capsys):
    rc, out, _ = run(
        capsys, "enumerate", "--exhaustive", "--seed", "cuboctahedron", "--lengths", "1"
    )
    assert rc == 0
    assert "mode: exhaustive" in out


def test_unknown_subcommand_exits_with_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
