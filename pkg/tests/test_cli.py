import json

import pytest

from witforge.cli import main
from witforge.machines import builtin
from witforge.tm import tm_to_text

K3 = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
P3 = "p edge 3 2\ne 1 2\ne 2 3\n"
F_SAT = "p cnf 2 1\n1 2 0\n"
MANIFEST = """
universe: {01p}*{n}
verifier: parity
witness: log2ceil(n + 1)
time: 2*n + 8
"""


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tradeoff_table_values(capsys):
    code, out, _ = run_cli(["tradeoff", "--alpha", "1.5", "--kmax", "2"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].split() == ["0", "1", "3/2", "3/2"]
    assert lines[2].split() == ["1", "5/2", "9/4", "9/10"]
    assert lines[3].split() == ["2", "19/4", "27/8", "27/38"]


def test_tradeoff_json_deterministic(capsys):
    code, out1, _ = run_cli(["tradeoff", "--alpha", "1.5", "--kmax", "3",
                             "--json"], capsys)
    code2, out2, _ = run_cli(["tradeoff", "--alpha", "1.5", "--kmax", "3",
                              "--json"], capsys)
    assert code == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["rows"][2]["z"] == "19/4"


def test_tradeoff_reports(tmp_path, capsys):
    csv = tmp_path / "t.csv"
    png = tmp_path / "t.png"
    code, _, _ = run_cli(["tradeoff", "--alpha", "1.5", "--kmax", "6",
                          "--csv", str(csv), "--plot", str(png)], capsys)
    assert code == 0
    rows = csv.read_text().splitlines()
    assert rows[0] == "k\tz\texponent\tratio"
    assert rows[1].split("\t") == ["0", "1", "3/2", "3/2"]
    assert png.stat().st_size > 1000


def test_clique_pipeline_exit_codes(tmp_path, capsys):
    graph = tmp_path / "k3.col"
    graph.write_text(K3)
    code, out, _ = run_cli(["clique", str(graph), "--k", "3",
                            "--via", "pipeline"], capsys)
    assert code == 10
    path = tmp_path / "p3.col"
    path.write_text(P3)
    code2, _, _ = run_cli(["clique", str(path), "--k", "3",
                           "--via", "pipeline"], capsys)
    assert code2 == 20


@pytest.mark.parametrize("via", ["gadget", "subsets"])
def test_clique_other_routes(tmp_path, capsys, via):
    graph = tmp_path / "k3.col"
    graph.write_text(K3)
    code, out, _ = run_cli(["clique", str(graph), "--k", "3", "--via", via,
                            "--json"], capsys)
    assert code == 10
    doc = json.loads(out)
    assert doc["member"] is True
    assert sorted(doc["witness"]) == [0, 1, 2]


def test_encode_then_decide(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text(F_SAT)
    outdir = tmp_path / "enc"
    code, _, _ = run_cli(["encode", "sat", str(cnf), "-o", str(outdir)], capsys)
    assert code == 0
    code2, out, _ = run_cli(["decide", str(outdir / "instance.manifest"),
                             str(outdir / "input.pstring"),
                             "--via", "bruteforce"], capsys)
    assert code2 == 10
    code3, out3, _ = run_cli(["decide", str(outdir / "instance.manifest"),
                              str(outdir / "input.pstring"), "--json"], capsys)
    assert code3 == 10
    doc = json.loads(out3)
    assert doc["member"] is True and doc["sat_index"] == 2


def test_decide_report_files(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text(F_SAT)
    outdir = tmp_path / "enc"
    run_cli(["encode", "sat", str(cnf), "-o", str(outdir)], capsys)
    rep = tmp_path / "fam.tsv"
    png = tmp_path / "fam.png"
    code, _, _ = run_cli(["decide", str(outdir / "instance.manifest"),
                          str(outdir / "input.pstring"),
                          "--report", str(rep), "--plot", str(png)], capsys)
    assert code == 10
    assert rep.read_text().startswith("i\tgates")
    assert png.stat().st_size > 1000


def test_compile_and_solve(tmp_path, capsys):
    machine = tmp_path / "parity.tm"
    machine.write_text(tm_to_text(builtin("parity")))
    out = tmp_path / "c.bin"
    code, _, _ = run_cli(["compile", str(machine), "--input", "pppp",
                          "--expose", "4", "--bound", "20",
                          "-o", str(out)], capsys)
    assert code == 0
    code2, stdout, _ = run_cli(["solve", str(out), "--lenient"], capsys)
    assert code2 == 10
    assert stdout.strip() == "SAT 0001"
    code3, _, _ = run_cli(["solve", str(out), "--lenient", "--jobs", "4"],
                          capsys)
    assert code3 == 10


def test_tm_run(tmp_path, capsys):
    machine = tmp_path / "az.tm"
    machine.write_text(tm_to_text(builtin("all_zeros")))
    code, out, _ = run_cli(["tm", "run", str(machine), "000",
                            "--bound", "20"], capsys)
    assert code == 0 and out.startswith("Accept")
    code2, out2, _ = run_cli(["tm", "run", str(machine), "010",
                              "--bound", "20", "--trace"], capsys)
    assert code2 == 0 and "Reject" in out2


def test_transform_commands(tmp_path, capsys):
    manifest = tmp_path / "toy.manifest"
    manifest.write_text(MANIFEST)
    code, out, _ = run_cli(["transform", str(manifest),
                            "--translate", "w=log2ceil(n + 1),w'=0"], capsys)
    assert code == 0
    assert "universe: {01p}*{n}" in out
    code2, out2, _ = run_cli(["transform", str(manifest),
                              "--pad", "f=2*n + 2"], capsys)
    assert code2 == 0
    assert "pad: f=2*n + 2" in out2


def test_transform_split_mismatch_is_domain_error(tmp_path, capsys):
    manifest = tmp_path / "toy.manifest"
    manifest.write_text(MANIFEST)
    code, _, err = run_cli(["transform", str(manifest),
                            "--translate", "w=n,w'=n"], capsys)
    assert code == 1
    assert "SplitMismatch" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_selftest_quick(capsys):
    code, out, _ = run_cli(["selftest", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == 0
