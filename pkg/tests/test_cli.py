from bkw import cli
from bkw.harness import fixture_bk_topo, fixture_ninestate, two_cycle
from bkw.modelio import dump_kripke, dump_nwf, dump_paratopo


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_command(tmp_path, capsys):
    path = tmp_path / "formulas.txt"
    path.write_text("[ab] Hba (Ua & D)\n# comment\n\nBa Xb Dt & Ea true\n")
    code, out, err = run(["parse", str(path)], capsys)
    assert code == 0
    assert out.splitlines() == ["[ab] Hba (Ua & D)", "Ba Xb Dt & Ea true"]


def test_parse_command_reports_errors(tmp_path, capsys):
    path = tmp_path / "formulas.txt"
    path.write_text("p &\n")
    code, out, err = run(["parse", str(path)], capsys)
    assert code == 2
    assert "line 1" in err


def test_check_command(tmp_path, capsys):
    path = tmp_path / "model.bk"
    path.write_text(dump_kripke(two_cycle()))
    code, out, _ = run(["check", str(path), "Hab Ub"], capsys)
    assert code == 0
    assert "extension: x" in out
    assert "satisfiable: True" in out
    assert "valid: False" in out


def test_check_command_on_all_model_kinds(tmp_path, capsys):
    nwf = tmp_path / "nine.bk"
    nwf.write_text(dump_nwf(fixture_ninestate()))
    code, out, _ = run(["check", str(nwf), "Ua & D+"], capsys)
    assert code == 0 and "extension: u" in out
    topo = tmp_path / "bk.bk"
    topo.write_text(dump_paratopo(fixture_bk_topo()))
    code, out, _ = run(["check", str(topo), "Ba Xb Dt & Ea true"], capsys)
    assert code == 0 and "extension: a1" in out


def test_check_command_language_error(tmp_path, capsys):
    path = tmp_path / "model.bk"
    path.write_text(dump_kripke(two_cycle()))
    code, _, err = run(["check", str(path), "Ba p"], capsys)
    assert code == 2
    assert "language" in err


def test_check_command_input_errors(tmp_path, capsys):
    code, _, err = run(["check", str(tmp_path / "missing.bk"), "p"], capsys)
    assert code == 2
    bad = tmp_path / "bad.bk"
    bad.write_text("kripke\nstates: x\nstates: y\nUa: x\nUb:\n")
    code, _, err = run(["check", str(bad), "p"], capsys)
    assert code == 2
    assert "duplicate" in err


def test_holes_command(tmp_path, capsys):
    path = tmp_path / "model.bk"
    path.write_text(dump_kripke(two_cycle()))
    code, out, _ = run(["holes", str(path)], capsys)
    assert code == 0
    assert "any hole: False" in out
    nwf = tmp_path / "nine.bk"
    nwf.write_text(dump_nwf(fixture_ninestate()))
    code, out, _ = run(["holes", str(nwf)], capsys)
    assert code == 0
    assert out.count("no hole") == 7


def test_fixtures_command(capsys):
    code, out, _ = run(["fixtures"], capsys)
    assert code == 0
    assert "all claims pass" in out


def test_campaign_command(capsys):
    code, out, _ = run(["campaign", "theorem12", "--max-states", "2"], capsys)
    assert code == 0
    assert "SUMMARY" in out
    code, out, _ = run(
        ["campaign", "lemma1", "--max-states", "2", "--no-strict",
         "--heart-local", "--serial"], capsys)
    assert code == 0
    assert '"serial": true' in out
    code, out, _ = run(["campaign", "adjunction", "--max-states", "2"], capsys)
    assert code == 0
    assert '"violations": 0' in out


def test_campaign_rejects_oversized_bounds(capsys):
    code, _, err = run(["campaign", "theorem22", "--max-states", "9"], capsys)
    assert code == 2


def test_lawvere_command(capsys):
    code, out, _ = run(["lawvere", "--sizeA", "2", "--sizeY", "2"], capsys)
    assert code == 0
    assert "no weakly point-surjective map" in out
    code, out, _ = run(["lawvere", "--sizeA", "2", "--sizeY", "1"], capsys)
    assert code == 0
    assert "witness" in out


def test_usage_errors_exit_2(capsys):
    assert cli.main(["campaign", "not-a-target"]) == 2
    capsys.readouterr()
