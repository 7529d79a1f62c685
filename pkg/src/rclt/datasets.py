"""Input providers: deterministic synthetic frame sequences and WAV framing."""

from __future__ import annotations

import math
import wave
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import CorruptFileError, UnsupportedFormatError

_U64 = 1 << 64

BASE_RAMP = "ramp"
BASE_CHECKER = "checker"
BASE_RANDOM = "random"


@dataclass
class SyntheticSpec:
    """Recipe for a repeated base frame with one optionally perturbed step.

    The perturbed step redraws ceil(perturb_fraction*ro*co) elements at
    seeded positions, uniformly over [0, frame max]. perturb_step=0 (or
    fraction 0) disables perturbation. Identical fields always produce
    identical frames.
    """

    ro: int = 10
    co: int = 10
    steps: int = 5
    base_pattern: str = BASE_RAMP
    perturb_step: int = 0
    perturb_fraction: float = 0.0
    seed: int = 42

    def validate(self) -> None:
        if self.ro < 1 or self.co < 1 or self.steps < 1:
            raise ValueError("ro, co, and steps must be >= 1")
        if self.base_pattern not in (BASE_RAMP, BASE_CHECKER, BASE_RANDOM):
            raise ValueError(f"unknown base_pattern {self.base_pattern!r}")
        if not 0.0 <= self.perturb_fraction <= 1.0:
            raise ValueError(f"perturb_fraction must be in [0, 1], got {self.perturb_fraction}")
        if self.perturb_step and not 1 <= self.perturb_step <= self.steps:
            raise ValueError(f"perturb_step {self.perturb_step} outside [1, {self.steps}]")


def _base_frame(spec: SyntheticSpec) -> np.ndarray:
    if spec.base_pattern == BASE_RAMP:
        return (np.arange(spec.ro * spec.co, dtype=np.float64) + 1.0).reshape(spec.ro, spec.co)
    if spec.base_pattern == BASE_CHECKER:
        r, c = np.indices((spec.ro, spec.co))
        return np.where((r + c) % 2 == 0, 1.0, 2.0)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([spec.seed % _U64, 0])))
    return rng.random((spec.ro, spec.co)) + 1e-9  # keep away from the all-zero frame


def gen_synthetic(spec: SyntheticSpec) -> list[np.ndarray]:
    """Emit `steps` frames: the seeded base pattern, perturbed at one step."""
    spec.validate()
    base = _base_frame(spec)
    n_perturb = math.ceil(spec.perturb_fraction * spec.ro * spec.co)
    frames = []
    for t in range(1, spec.steps + 1):
        frame = base.copy()
        if t == spec.perturb_step and n_perturb > 0:
            rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([spec.seed % _U64, 1])))
            flat = frame.ravel()
            positions = rng.choice(flat.size, size=n_perturb, replace=False)
            flat[positions] = rng.random(n_perturb) * flat.max()
        frames.append(frame)
    return frames


@dataclass
class AudioStream:
    sample_rate: int
    samples: np.ndarray  # mono, floats in [-1, 1]


def load_wav(path) -> AudioStream:
    """Read a RIFF/WAVE file; only 16-bit PCM mono is accepted.

    Each 16-bit sample s maps to s/32768, landing in [-1, 1).
    """
    try:
        with wave.open(str(path), "rb") as wav:
            channels = wav.getnchannels()
            width = wav.getsampwidth()
            comp = wav.getcomptype()
            if channels != 1:
                raise UnsupportedFormatError(f"expected mono, got {channels} channels")
            if width != 2:
                raise UnsupportedFormatError(f"expected 16-bit samples, got {8 * width}-bit")
            if comp != "NONE":
                raise UnsupportedFormatError(f"expected PCM, got compression {comp!r}")
            rate = wav.getframerate()
            raw = wav.readframes(wav.getnframes())
    except wave.Error as exc:
        raise CorruptFileError(f"{path}: {exc}") from exc
    except UnsupportedFormatError:
        raise
    except OSError as exc:
        raise CorruptFileError(f"{path}: {exc}") from exc
    samples = np.frombuffer(raw, dtype="<i2").astype(np.float64) / 32768.0
    return AudioStream(sample_rate=rate, samples=samples)


def frame_audio(stream: AudioStream, ro: int, co: int, hop: int) -> list[np.ndarray]:
    """Slice the sample stream into ro x co frames every `hop` samples.

    Frame k covers samples [k*hop, k*hop + ro*co), filled row-major.
    Streams shorter than one window yield no frames.
    """
    if hop < 1:
        raise ValueError(f"hop must be >= 1, got {hop}")
    window = ro * co
    n = stream.samples.size
    if n < window:
        return []
    count = (n - window) // hop + 1
    return [stream.samples[k * hop:k * hop + window].reshape(ro, co).copy()
            for k in range(count)]


def bundled_wav_path() -> Path:
    """Path of the ~1 s test tone shipped with the package."""
    return Path(resources.files("rclt").joinpath("data/tone.wav"))
