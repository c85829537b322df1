import json

import pytest

from delpezzo import census, cli
from delpezzo.toric import ToricSystem


def test_surfaces_listing(capsys):
    assert cli.main(["surfaces", "--degree", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# delpezzo")
    assert out.count("X_{3") == 21


def test_surfaces_single_name(capsys):
    assert cli.main(["surfaces", "--degree", "6", "--name", "A1+A2"]) == 0
    out = capsys.readouterr().out
    assert "I^irr: E3" in out


def test_surfaces_bad_degree(capsys):
    assert cli.main(["surfaces", "--degree", "99"]) == 2
    assert "error:" in capsys.readouterr().err


def test_check_verb(tmp_path, capsys):
    path = tmp_path / "system.json"
    path.write_text(json.dumps(census.section13_system().to_json()))
    assert cli.main(["check", str(path), "--surface", "A1+2A3"]) == 0
    out = capsys.readouterr().out
    body = json.loads(out.split("\n", 1)[1])
    assert body["valid"] and body["kind"] == "second" and body["type"] == "IIb"
    assert body["strong"] and not body["cyclic_strong"]
    assert body["augmentation_certificate"] is None


def test_check_malformed(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    assert cli.main(["check", str(path)]) == 2
    path.write_text(json.dumps({"degree": 6, "terms": [[1, 0, 0, 0]] * 6}))
    assert cli.main(["check", str(path)]) == 2


def test_check_missing_file(capsys):
    assert cli.main(["check", "/nonexistent/system.json"]) == 2


def test_reproduce_pass(capsys):
    assert cli.main(["reproduce", "table1"]) == 0
    out = capsys.readouterr().out
    assert "PASS class inventories by degree" in out


def test_reproduce_out_file(tmp_path, capsys):
    out_path = tmp_path / "report.txt"
    assert cli.main(["reproduce", "table3", "--out", str(out_path)]) == 0
    assert "PASS" in out_path.read_text()


def test_reproduce_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        cli.main(["reproduce", "table99"])
    assert exc.value.code == 2


def test_resolve_sequence():
    class Args:
        sequence = "IIb-deg2"

    assert isinstance(cli._resolve_sequence(Args()), census.SequencePreset)
    Args.sequence = "[0,0,-1,-1,-1]"
    assert isinstance(cli._resolve_sequence(Args()), ToricSystem)
    Args.sequence = "not json"
    with pytest.raises(Exception):
        cli._resolve_sequence(Args())


def test_config_hash_stable():
    parser = cli.build_parser()
    a1 = parser.parse_args(["surfaces", "--degree", "3"])
    a2 = parser.parse_args(["surfaces", "--degree", "3"])
    a3 = parser.parse_args(["surfaces", "--degree", "4"])
    assert cli._config_hash(a1) == cli._config_hash(a2)
    assert cli._config_hash(a1) != cli._config_hash(a3)
