"""Regenerate the bundled test tone at src/rclt/data/tone.wav.

One 400-sample window (ten 200 Hz cycles plus twenty 400 Hz cycles at
8 kHz) is quantized to int16 once and tiled 20 times, so every
400-sample analysis frame of the file is bit-identical and the waveform
stays continuous across frame boundaries.
"""

import wave
from pathlib import Path

import numpy as np

SAMPLE_RATE = 8000
WINDOW = 400
REPEATS = 20
OUT = Path(__file__).resolve().parents[1] / "src" / "rclt" / "data" / "tone.wav"


def main() -> None:
    n = np.arange(WINDOW)
    signal = (0.7 * np.sin(2.0 * np.pi * 200.0 * n / SAMPLE_RATE)
              + 0.2 * np.sin(2.0 * np.pi * 400.0 * n / SAMPLE_RATE + 0.5))
    window = np.round(signal * 32000.0).astype("<i2")
    samples = np.tile(window, REPEATS)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with wave.open(str(OUT), "wb") as wav:
        wav.setnchannels(1)
        wav.setsampwidth(2)
        wav.setframerate(SAMPLE_RATE)
        wav.writeframes(samples.tobytes())
    print(f"wrote {OUT} ({samples.size} samples, {samples.size / SAMPLE_RATE:.2f} s)")


if __name__ == "__main__":
    main()
