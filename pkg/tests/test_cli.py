import io
import json

import pytest

from solvsph import ConfigParseError, JobConfig, get_preset, parse_config_text, preset_names
from solvsph.cli import cmd_check, cmd_semigroup, cmd_verify, main


def _run_main(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_preset_text_round_trips():
    for name in preset_names():
        config = get_preset(name)
        assert parse_config_text(config.to_text()) == config


def test_json_round_trips():
    for name in preset_names():
        config = get_preset(name)
        blob = json.dumps(config.to_json_dict())
        assert JobConfig.from_json_dict(json.loads(blob)) == config


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ConfigParseError) as err:
        parse_config_text("[group]\nA x\n")
    assert err.value.line == 2
    with pytest.raises(ConfigParseError):
        parse_config_text("stray\n")
    with pytest.raises(ConfigParseError) as err:
        parse_config_text("[group]\nA 2\n[options]\nheight_bound = soon\n")
    assert err.value.line == 4


def test_check_command_on_presets(capsys):
    code, out, _ = _run_main(["check", "--preset", "sl4-sp4borel"], capsys)
    assert code == 0
    assert "spherical: yes   (m = 2)" in out
    code, out, _ = _run_main(["check", "--preset", "borel"], capsys)
    assert code == 0
    assert "(m = 0)" in out


def test_check_command_negative_verdict(capsys):
    code, out, _ = _run_main(["check", "--preset", "sl2-trivial"], capsys)
    assert code == 1
    assert "NOT spherical" in out


def test_check_command_rejects_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.cfg"
    bad.write_text("[group]\nA 2\n[torus]\n1 0\n0 1\n[nilradical]\n(1 0) 1, (0 1) 1\n")
    code, _, err = _run_main(["check", str(bad)], capsys)
    assert code == 2
    assert "MixedWeightConstraint" in err or "mixes S-weights" in err


def test_semigroup_command_text(capsys):
    code, out, _ = _run_main(["semigroup", "--preset", "sl4-sp4borel"], capsys)
    assert code == 0
    assert "5 free generators (n = 3, m = 2)" in out
    assert "(w1+w3, chi=[1, 1])   weight=[1, 0, 1]  [active]" in out


def test_semigroup_command_not_spherical(capsys):
    code, out, _ = _run_main(["semigroup", "--preset", "sl2-trivial"], capsys)
    assert code == 1
    assert "NOT spherical" in out


def test_semigroup_json_is_deterministic():
    config = get_preset("tu-prime")
    buf1, buf2 = io.StringIO(), io.StringIO()
    assert cmd_semigroup(config, as_json=True, out=buf1) == 0
    assert cmd_semigroup(config, as_json=True, out=buf2) == 0
    assert buf1.getvalue() == buf2.getvalue()
    payload = json.loads(buf1.getvalue())
    assert payload["schema"] == 1
    assert payload["n"] == 2 and payload["m"] == 2
    assert JobConfig.from_json_dict(payload["config"]) == config


def test_verify_command_passes_on_presets(capsys):
    code, out, _ = _run_main(["verify", "--preset", "sl2-torus", "--height", "3"], capsys)
    assert code == 0
    assert out.count("[PASS]") >= 3 and "[FAIL]" not in out


def test_verify_command_refuses_nonspherical(capsys):
    code, out, _ = _run_main(["verify", "--preset", "sl2-trivial"], capsys)
    assert code == 1
    assert "NOT spherical" in out


def test_verify_env_overrides(monkeypatch):
    monkeypatch.setenv("SOLVSPH_HEIGHT", "1")
    monkeypatch.setenv("SOLVSPH_TRIALS", "40")
    buf = io.StringIO()
    code = cmd_verify(get_preset("sl2-torus"), out=buf)
    assert code == 0
    assert "up to height 1" in buf.getvalue()
    assert "within 40 trials" in buf.getvalue()


def test_verify_flag_beats_env(monkeypatch):
    monkeypatch.setenv("SOLVSPH_HEIGHT", "1")
    buf = io.StringIO()
    code = cmd_verify(get_preset("sl2-torus"), height=2, out=buf)
    assert code == 0
    assert "up to height 2" in buf.getvalue()


def test_verify_unsupported_type_is_input_error(capsys):
    code, _, err = _run_main(["verify", "--preset", "tu-prime", "--group", "B2"], capsys)
    assert code == 2
    assert "no matrix realization" in err


def test_presets_commands(capsys):
    code, out, _ = _run_main(["presets", "list"], capsys)
    assert code == 0
    for name in preset_names():
        assert name in out
    code, out, _ = _run_main(["presets", "show", "sl4-sp4borel"], capsys)
    assert code == 0
    assert parse_config_text(out) == get_preset("sl4-sp4borel")
    code, _, _ = _run_main(["presets", "show", "nope"], capsys)
    assert code == 2


def test_group_override(capsys):
    code, out, _ = _run_main(["semigroup", "--preset", "tu-prime", "--group", "A3"], capsys)
    assert code == 0
    assert "6 free generators (n = 3, m = 3)" in out
    # fixed presets reject overrides
    code, _, err = _run_main(["check", "--preset", "sl2-torus", "--group", "A2"], capsys)
    assert code == 2


def test_check_from_config_file(tmp_path, capsys):
    path = tmp_path / "job.cfg"
    path.write_text(get_preset("sl4-sp4borel").to_text())
    code, out, _ = _run_main(["check", str(path)], capsys)
    assert code == 0
    assert "spherical: yes" in out


def test_missing_source_is_input_error(capsys):
    code, _, err = _run_main(["check"], capsys)
    assert code == 2
