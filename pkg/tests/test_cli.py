import numpy as np

from rclt import bundled_wav_path, load_state, parse_kv_lines
from rclt.cli import main, resolve_run_config


def run_ok(argv):
    assert main(argv) == 0


def test_run_synthetic_writes_full_inventory(tmp_path):
    out = tmp_path / "run"
    run_ok(["run-synthetic", "--out", str(out), "--steps", "3"])
    names = sorted(p.name for p in out.iterdir())
    assert names == [
        "accuracy.csv", "config.txt",
        "input_t001.pbm", "input_t002.pbm", "input_t003.pbm",
        "matched_t001.pbm", "matched_t002.pbm", "matched_t003.pbm",
        "state.rclt",
    ]
    csv = (out / "accuracy.csv").read_text().splitlines()
    assert csv[0] == "t,accuracy_percent"
    assert len(csv) == 4
    assert csv[1].startswith("1,")


def test_run_synthetic_pbm_dimensions(tmp_path):
    out = tmp_path / "run"
    run_ok(["run-synthetic", "--out", str(out), "--steps", "1"])
    header = (out / "input_t001.pbm").read_text().splitlines()[:2]
    assert header == ["P1", "10 10"]


def test_run_synthetic_echoes_resolved_config(tmp_path):
    out = tmp_path / "run"
    run_ok(["run-synthetic", "--out", str(out), "--steps", "2", "--seed", "7", "--rule", "fos"])
    pairs = parse_kv_lines((out / "config.txt").read_text())
    assert pairs["seed"] == "7"
    assert pairs["rule"] == "fos"
    assert pairs["steps"] == "2"
    assert pairs["ro"] == "10"


def test_config_file_applies_and_flags_override(tmp_path):
    cfg_file = tmp_path / "run.cfg"
    cfg_file.write_text("ro = 5\nco = 5\nseed = 9\nsteps = 4\n")
    out = tmp_path / "run"
    run_ok(["run-synthetic", "--config", str(cfg_file), "--out", str(out), "--seed", "13"])
    pairs = parse_kv_lines((out / "config.txt").read_text())
    assert pairs["ro"] == "5"
    assert pairs["seed"] == "13"  # flag wins over file
    assert pairs["steps"] == "4"
    state = load_state(out / "state.rclt")
    assert state.cfg.seed == 13
    assert state.bank.i_product == 25


def test_rclt_out_env_var_sets_default_dir(tmp_path, monkeypatch):
    target = tmp_path / "from_env"
    monkeypatch.setenv("RCLT_OUT", str(target))
    run_ok(["run-synthetic", "--steps", "1"])
    assert (target / "accuracy.csv").exists()


def test_explicit_out_beats_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("RCLT_OUT", str(tmp_path / "ignored"))
    out = tmp_path / "explicit"
    run_ok(["run-synthetic", "--out", str(out), "--steps", "1"])
    assert (out / "accuracy.csv").exists()
    assert not (tmp_path / "ignored").exists()


def test_identical_runs_are_byte_identical(tmp_path):
    out1, out2 = tmp_path / "one", tmp_path / "two"
    argv = ["run-synthetic", "--steps", "5", "--perturb-step", "3",
            "--perturb-fraction", "0.1", "--seed", "21"]
    run_ok(argv + ["--out", str(out1)])
    run_ok(argv + ["--out", str(out2)])
    # config.txt echoes the differing --out values and is excluded
    for name in ("accuracy.csv", "state.rclt", "input_t003.pbm"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_run_audio_bundled_tone(tmp_path):
    out = tmp_path / "audio"
    run_ok(["run-audio", "--wav", str(bundled_wav_path()), "--out", str(out)])
    csv = (out / "accuracy.csv").read_text().splitlines()
    assert len(csv) == 21  # header + 20 non-overlapping frames
    header = (out / "input_t001.pbm").read_text().splitlines()[:2]
    assert header == ["P1", "20 20"]


def test_run_audio_requires_wav(capsys):
    assert main(["run-audio"]) == 1
    assert "wav" in capsys.readouterr().err


def test_run_audio_missing_file_fails(tmp_path, capsys):
    code = main(["run-audio", "--wav", str(tmp_path / "nope.wav"),
                 "--out", str(tmp_path / "out")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_invalid_config_value_fails(tmp_path, capsys):
    cfg_file = tmp_path / "bad.cfg"
    cfg_file.write_text("k2_low = 0.4\nk2_high = 0.2\n")
    code = main(["run-synthetic", "--config", str(cfg_file), "--out", str(tmp_path / "o")])
    assert code == 1
    assert "k2" in capsys.readouterr().err


def test_unknown_config_key_fails(tmp_path, capsys):
    cfg_file = tmp_path / "bad.cfg"
    cfg_file.write_text("rows = 4\n")
    code = main(["run-synthetic", "--config", str(cfg_file), "--out", str(tmp_path / "o")])
    assert code == 1
    assert "unknown config key" in capsys.readouterr().err


def test_missing_config_file_fails(tmp_path, capsys):
    code = main(["run-synthetic", "--config", str(tmp_path / "absent.cfg")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_inspect_summarizes_archive(tmp_path, capsys):
    out = tmp_path / "run"
    run_ok(["run-synthetic", "--out", str(out), "--steps", "2"])
    capsys.readouterr()
    assert main(["inspect", str(out / "state.rclt")]) == 0
    text = capsys.readouterr().out
    assert "columns: 8" in text
    assert "i_product: 100" in text
    assert "last_t: 2" in text
    assert "memory_store:" in text
    assert "column 0:" in text


def test_inspect_missing_archive_fails(tmp_path, capsys):
    assert main(["inspect", str(tmp_path / "none.rclt")]) == 1
    assert "error:" in capsys.readouterr().err


def test_verbose_prints_step_lines(tmp_path, capsys):
    out = tmp_path / "run"
    run_ok(["run-synthetic", "--out", str(out), "--steps", "2", "--verbose"])
    lines = capsys.readouterr().out.splitlines()
    assert any(line.startswith("t=1 accuracy=") for line in lines)
    assert any("winners=" in line for line in lines)


def test_resolve_run_config_audio_defaults():
    rc = resolve_run_config("audio", {}, {})
    assert rc.circuit.ro == 20
    assert rc.circuit.co == 20
    rc2 = resolve_run_config("synthetic", {}, {})
    assert rc2.circuit.ro == 10


def test_matched_bitmap_matches_archive_store(tmp_path):
    out = tmp_path / "run"
    run_ok(["run-synthetic", "--out", str(out), "--steps", "3"])
    circuit = load_state(out / "state.rclt")
    pbm = (out / "matched_t003.pbm").read_text().splitlines()[2:]
    bits = np.array([int(tok) for row in pbm for tok in row.split()], dtype=np.uint8)
    pattern, _ = circuit.store.predict(bits)
    assert np.array_equal(pattern, bits)
