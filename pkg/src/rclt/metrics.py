"""Scoring utilities shared by the poolers and the experiment runner."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatchError


@dataclass
class AccuracyRecord:
    t: int
    accuracy_percent: float


def percent_accuracy(a: np.ndarray, b: np.ndarray) -> float:
    """Positional agreement between two equal-length bit vectors, in percent.

    Both 1-agreements and 0-agreements count. Computed as 100*matches/length
    in that operand order so that round counts stay exact (199 of 200 -> 99.5).
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise LengthMismatchError(f"lengths {a.size} vs {b.size}")
    matches = int(np.count_nonzero(a == b))
    return 100.0 * matches / a.size


def density(a: np.ndarray) -> float:
    """Fraction of active bits."""
    a = np.asarray(a)
    return int(np.count_nonzero(a)) / a.size


def active_overlap_ratio(a: np.ndarray, b: np.ndarray) -> float:
    """Shared active bits over the union of active bits, in percent.

    Secondary metric reported next to percent_accuracy in verbose runs;
    returns 100.0 when both vectors are all-zero.
    """
    a = np.asarray(a).astype(bool)
    b = np.asarray(b).astype(bool)
    if a.shape != b.shape:
        raise LengthMismatchError(f"lengths {a.size} vs {b.size}")
    union = int(np.count_nonzero(a | b))
    if union == 0:
        return 100.0
    return 100.0 * int(np.count_nonzero(a & b)) / union
