"""Feed the bundled one-second test tone through the audio pipeline.

The WAV is sliced into non-overlapping 400-sample windows, each reshaped
to a 20x20 frame and encoded like any other input. The tone tiles a
single 400-sample period, so every frame is identical and recall is
perfect from the second step on. Equivalent CLI invocation:

    rclt run-audio --wav src/rclt/data/tone.wav --out /tmp/rclt_audio

Run from the repo root:

    python demos/05_audio_experiment.py
"""

import tempfile
from pathlib import Path

from rclt import (
    CircuitConfig,
    bundled_wav_path,
    density,
    frame_audio,
    load_state,
    load_wav,
)
from rclt.cli import main as cli_main


def main():
    wav = bundled_wav_path()
    stream = load_wav(wav)
    print(f"{wav.name}: {stream.samples.size} samples at {stream.sample_rate} Hz "
          f"({stream.samples.size / stream.sample_rate:.2f} s)")

    cfg = CircuitConfig(ro=20, co=20)
    frames = frame_audio(stream, cfg.ro, cfg.co, hop=cfg.ro * cfg.co)
    print(f"{len(frames)} non-overlapping {cfg.ro}x{cfg.co} frames\n")

    out = Path(tempfile.mkdtemp(prefix="rclt_audio_"))
    code = cli_main(["run-audio", "--wav", str(wav), "--out", str(out)])
    assert code == 0

    print("accuracy.csv:")
    lines = (out / "accuracy.csv").read_text().splitlines()
    for line in lines[:6]:
        print("   ", line)
    print(f"    ... ({len(lines) - 1} steps total)\n")

    circuit = load_state(out / "state.rclt")
    print(f"archived circuit: {circuit.bank.count} columns, last_t = {circuit.last_t}, "
          f"{len(circuit.store)} memory entries")
    sdr_density = density(circuit.store.entries[0].pattern)
    print(f"stored SDR density {sdr_density:.3f} "
          f"(k2 band is 0.1 to 0.2)")

    pbms = sorted(p.name for p in out.glob("*.pbm"))
    print(f"\n{len(pbms)} PBM bitmaps written, e.g. {pbms[0]} / {pbms[-1]}")
    print(f"artifacts left in {out}")


if __name__ == "__main__":
    main()
