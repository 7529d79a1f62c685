import wave

import numpy as np
import pytest

from rclt import (
    AudioStream,
    CorruptFileError,
    SyntheticSpec,
    UnsupportedFormatError,
    bundled_wav_path,
    frame_audio,
    gen_synthetic,
    load_wav,
)


def test_gen_synthetic_ramp_values():
    frames = gen_synthetic(SyntheticSpec(ro=2, co=3, steps=2))
    assert len(frames) == 2
    assert np.array_equal(frames[0], [[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])
    assert np.array_equal(frames[0], frames[1])


def test_gen_synthetic_checker_values():
    frames = gen_synthetic(SyntheticSpec(ro=2, co=2, steps=1, base_pattern="checker"))
    assert np.array_equal(frames[0], [[1.0, 2.0], [2.0, 1.0]])


def test_gen_synthetic_random_is_seeded():
    spec = SyntheticSpec(ro=4, co=4, steps=3, base_pattern="random", seed=7)
    a = gen_synthetic(spec)
    b = gen_synthetic(SyntheticSpec(ro=4, co=4, steps=3, base_pattern="random", seed=7))
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    c = gen_synthetic(SyntheticSpec(ro=4, co=4, steps=3, base_pattern="random", seed=8))
    assert not np.array_equal(a[0], c[0])
    assert (a[0] > 0).all()


def test_gen_synthetic_perturbs_only_named_step():
    spec = SyntheticSpec(ro=5, co=5, steps=5, perturb_step=4, perturb_fraction=0.08, seed=43)
    frames = gen_synthetic(spec)
    base = frames[0]
    for t in (1, 2, 3, 5):
        assert np.array_equal(frames[t - 1], base)
    changed = int(np.count_nonzero(frames[3] != base))
    # ceil(0.08 * 25) = 2 redrawn elements
    assert changed == 2
    assert frames[3].max() <= base.max()


def test_gen_synthetic_perturbation_deterministic():
    spec = SyntheticSpec(ro=5, co=5, steps=4, perturb_step=2, perturb_fraction=0.2, seed=11)
    a = gen_synthetic(spec)[1]
    b = gen_synthetic(spec)[1]
    assert np.array_equal(a, b)


def test_gen_synthetic_validation():
    with pytest.raises(ValueError):
        gen_synthetic(SyntheticSpec(ro=0))
    with pytest.raises(ValueError):
        gen_synthetic(SyntheticSpec(base_pattern="spiral"))
    with pytest.raises(ValueError):
        gen_synthetic(SyntheticSpec(perturb_fraction=1.5))
    with pytest.raises(ValueError):
        gen_synthetic(SyntheticSpec(steps=3, perturb_step=9))


def test_load_wav_bundled_tone():
    stream = load_wav(bundled_wav_path())
    assert stream.sample_rate == 8000
    assert stream.samples.size == 8000
    assert stream.samples.dtype == np.float64
    assert stream.samples.max() < 1.0
    assert stream.samples.min() >= -1.0
    # the tone tiles a single 400-sample window end to end
    window = stream.samples[:400]
    assert np.array_equal(stream.samples.reshape(20, 400), np.tile(window, (20, 1)))


def _write_wav(path, channels=1, width=2, rate=8000, frames=64):
    with wave.open(str(path), "wb") as wav:
        wav.setnchannels(channels)
        wav.setsampwidth(width)
        wav.setframerate(rate)
        wav.writeframes(b"\x01\x02" * width * channels * frames)


def test_load_wav_rejects_stereo(tmp_path):
    path = tmp_path / "stereo.wav"
    _write_wav(path, channels=2)
    with pytest.raises(UnsupportedFormatError):
        load_wav(path)


def test_load_wav_rejects_8_bit(tmp_path):
    path = tmp_path / "eight.wav"
    _write_wav(path, width=1)
    with pytest.raises(UnsupportedFormatError):
        load_wav(path)


def test_load_wav_rejects_garbage(tmp_path):
    path = tmp_path / "garbage.wav"
    path.write_bytes(b"not a riff file at all")
    with pytest.raises(CorruptFileError):
        load_wav(path)


def test_load_wav_missing_file():
    with pytest.raises(CorruptFileError):
        load_wav("/nonexistent/nope.wav")


def test_frame_audio_count_and_content():
    stream = AudioStream(sample_rate=8000, samples=np.arange(10.0))
    frames = frame_audio(stream, ro=2, co=2, hop=2)
    # (10 - 4) // 2 + 1 = 4 frames
    assert len(frames) == 4
    assert np.array_equal(frames[0], [[0.0, 1.0], [2.0, 3.0]])
    assert np.array_equal(frames[1], [[2.0, 3.0], [4.0, 5.0]])
    assert np.array_equal(frames[3], [[6.0, 7.0], [8.0, 9.0]])


def test_frame_audio_non_overlapping_default_shape():
    stream = load_wav(bundled_wav_path())
    frames = frame_audio(stream, ro=20, co=20, hop=400)
    assert len(frames) == 20
    assert frames[0].shape == (20, 20)
    assert np.array_equal(frames[0], frames[19])


def test_frame_audio_short_stream_yields_nothing():
    stream = AudioStream(sample_rate=8000, samples=np.arange(3.0))
    assert frame_audio(stream, ro=2, co=2, hop=2) == []


def test_frame_audio_rejects_bad_hop():
    stream = AudioStream(sample_rate=8000, samples=np.arange(10.0))
    with pytest.raises(ValueError):
        frame_audio(stream, ro=2, co=2, hop=0)
