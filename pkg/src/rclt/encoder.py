"""Analog frame to binary SDR encoding.

Pipeline: resize (strided subsampling) -> max normalization -> rule
threshold selection (first-last or frequent-occurring) -> binarization
with sparsity enforcement -> flat bit vector.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyResultError, ZeroFrameError

logger = logging.getLogger(__name__)

RULE_FIRST_LAST = "fl"
RULE_FREQUENT = "fos"

ROW_MAJOR = "row_major"
COLUMN_MAJOR = "column_major"


@dataclass
class EncoderConfig:
    """Knobs for the encoding pipeline.

    K_o subsamples the frame by that stride; k1 scales the rule threshold;
    k2_low/k2_high bound the target SDR density; quantization_step bins
    values for the frequent-occurring mode.
    """

    K_o: int = 1
    rule: str = RULE_FIRST_LAST
    k1: float = 1.0
    k2_low: float = 0.1
    k2_high: float = 0.2
    quantization_step: float = 0.05
    flatten_order: str = ROW_MAJOR

    def validate(self) -> None:
        if self.K_o < 1:
            raise ValueError(f"K_o must be >= 1, got {self.K_o}")
        if not (0.0 < self.k2_low <= self.k2_high < 1.0):
            raise ValueError(f"need 0 < k2_low <= k2_high < 1, got {self.k2_low}, {self.k2_high}")
        if self.quantization_step <= 0.0:
            raise ValueError(f"quantization_step must be > 0, got {self.quantization_step}")
        if self.rule not in (RULE_FIRST_LAST, RULE_FREQUENT):
            raise ValueError(f"unknown rule {self.rule!r}")
        if self.flatten_order not in (ROW_MAJOR, COLUMN_MAJOR):
            raise ValueError(f"unknown flatten_order {self.flatten_order!r}")


@dataclass
class NormalizedFrame:
    """Frame scaled into [0, 1] by its largest absolute value."""

    values: np.ndarray
    max_abs: float


@dataclass
class RuleThreshold:
    """Thresholds extracted from one normalized frame.

    All three values are recorded regardless of rule; only the ones the
    rule needs are used during binarization.
    """

    rule: str
    x_first: float
    x_last: float
    x_f: float
    k1: float = 1.0


def _validate_frame(frame: np.ndarray) -> np.ndarray:
    frame = np.asarray(frame, dtype=np.float64)
    if frame.ndim != 2 or frame.shape[0] < 1 or frame.shape[1] < 1:
        raise ValueError(f"frame must be a 2-D matrix, got shape {frame.shape}")
    if not np.all(np.isfinite(frame)):
        raise ValueError("frame contains NaN or infinite values")
    return frame


def _flatten(values: np.ndarray, order: str) -> np.ndarray:
    return values.ravel(order="C" if order == ROW_MAJOR else "F")


def resize(frame: np.ndarray, K_o: int) -> np.ndarray:
    """Subsample every K_o-th element in each dimension, starting at index 0.

    Output shape is floor(ro/K_o) x floor(co/K_o); remainder rows/cols
    beyond the last full stride are dropped. K_o=1 is the identity.
    """
    frame = _validate_frame(frame)
    if K_o < 1:
        raise ValueError(f"K_o must be >= 1, got {K_o}")
    if K_o == 1:
        return frame
    ro, co = frame.shape
    out_r, out_c = ro // K_o, co // K_o
    if out_r == 0 or out_c == 0:
        raise EmptyResultError(f"resize of {ro}x{co} frame by K_o={K_o} is empty")
    return frame[::K_o, ::K_o][:out_r, :out_c]


def normalize(frame: np.ndarray) -> NormalizedFrame:
    """Fold signs and divide by the largest absolute value.

    Absolute values keep signed inputs (audio samples) inside [0, 1]; the
    maximizing element maps to exactly 1.0.
    """
    frame = _validate_frame(frame)
    folded = np.abs(frame)
    max_abs = float(folded.max())
    if max_abs == 0.0:
        raise ZeroFrameError("all frame values are zero")
    return NormalizedFrame(values=folded / max_abs, max_abs=max_abs)


def _quantize_bins(values: np.ndarray, step: float) -> np.ndarray:
    # round-half-even, matching both numpy and builtin round()
    return np.round(values / step).astype(np.int64)


def select_threshold(norm: NormalizedFrame, cfg: EncoderConfig) -> RuleThreshold:
    """Extract x_first, x_last, and the quantized mode x_f from a frame.

    x_f is the most frequent value after rounding each value to the nearest
    multiple of cfg.quantization_step; frequency ties go to the smaller
    quantized value.
    """
    flat = _flatten(norm.values, cfg.flatten_order)
    bins = _quantize_bins(flat, cfg.quantization_step)
    uniq, counts = np.unique(bins, return_counts=True)
    # np.unique sorts ascending, argmax takes the first max: smallest bin wins ties
    x_f = float(uniq[np.argmax(counts)] * cfg.quantization_step)
    return RuleThreshold(
        rule=cfg.rule,
        x_first=float(flat[0]),
        x_last=float(flat[-1]),
        x_f=x_f,
        k1=cfg.k1,
    )


def binarize(norm: NormalizedFrame, thr: RuleThreshold, cfg: EncoderConfig) -> np.ndarray:
    """Threshold a normalized frame into a flat 0/1 vector and enforce sparsity.

    First-last rule: bit i is active where the value strictly exceeds
    k1*x_first or k1*x_last. Frequent-occurring rule: strictly exceeds
    k1*x_f. If the result is denser than k2_high, only the
    ceil(k2_high*length) active bits with the largest underlying values
    survive (ties to the lower index). Under-density below k2_low is
    logged but left alone.
    """
    flat = _flatten(norm.values, cfg.flatten_order)
    if thr.rule == RULE_FIRST_LAST:
        bits = (flat > thr.k1 * thr.x_first) | (flat > thr.k1 * thr.x_last)
    else:
        bits = flat > thr.k1 * thr.x_f
    bits = bits.astype(np.uint8)

    n = bits.size
    active = int(bits.sum())
    if active > cfg.k2_high * n:
        keep = math.ceil(cfg.k2_high * n)
        active_idx = np.flatnonzero(bits)
        # stable sort on descending value keeps lower indices first among ties
        order = np.argsort(-flat[active_idx], kind="stable")
        kept = active_idx[order[:keep]]
        bits = np.zeros(n, dtype=np.uint8)
        bits[kept] = 1
    elif active < cfg.k2_low * n:
        logger.debug("SDR density %.4f below k2_low=%.3f (left uncorrected)", active / n, cfg.k2_low)
    return bits


def encode(frame: np.ndarray, cfg: EncoderConfig | None = None) -> np.ndarray:
    """Full pipeline: resize, normalize, pick thresholds, binarize, flatten.

    Output length is floor(ro/K_o) * floor(co/K_o).
    """
    if cfg is None:
        cfg = EncoderConfig()
    cfg.validate()
    small = resize(frame, cfg.K_o)
    norm = normalize(small)
    thr = select_threshold(norm, cfg)
    return binarize(norm, thr, cfg)
