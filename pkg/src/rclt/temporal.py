"""Temporal pooler state: per-column segments, synaptic potentials, memory store.

Segments hold the input SDR a column saw when it won. Potentials are
formed either from the first and last segments of one column (first-last
rule) or from the most frequently occurring segment pattern across
columns (FOS rule), then matched against the incoming SDR.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EmptySegmentsError,
    EmptyStoreError,
    InvalidScoreError,
    LengthMismatchError,
    NonMonotonicTimeError,
)
from .metrics import percent_accuracy

RULE_FL = "fl"
RULE_FOS = "fos"


@dataclass
class Segment:
    pattern: np.ndarray
    created_at: int


@dataclass
class ColumnSegments:
    """Time-ordered segment list owned by one column."""

    column_index: int
    segments: list[Segment] = field(default_factory=list)

    def insert(self, pattern: np.ndarray, t: int) -> None:
        """Append a segment; t must exceed every existing created_at."""
        if self.segments and t <= self.segments[-1].created_at:
            raise NonMonotonicTimeError(
                f"t={t} not after last segment t={self.segments[-1].created_at}")
        self.segments.append(Segment(np.array(pattern, dtype=np.uint8, copy=True), t))


@dataclass
class SynapticPotential:
    pattern: np.ndarray
    rule: str
    source_column: int


def insert_segment(state: ColumnSegments, pattern: np.ndarray, t: int) -> ColumnSegments:
    state.insert(pattern, t)
    return state


def fl_potential(state: ColumnSegments) -> SynapticPotential:
    """OR of the column's first and last segment patterns."""
    if not state.segments:
        raise EmptySegmentsError(f"column {state.column_index} has no segments")
    first = state.segments[0].pattern
    last = state.segments[-1].pattern
    return SynapticPotential(pattern=(first | last).astype(np.uint8),
                             rule=RULE_FL, source_column=state.column_index)


def _modal_segment(state: ColumnSegments) -> tuple[np.ndarray, int]:
    """Most frequent exact bit pattern in one column and its multiplicity.

    Multiplicity ties go to the pattern whose first occurrence is earliest.
    """
    counts: dict[bytes, int] = {}
    first_seen: dict[bytes, Segment] = {}
    for seg in state.segments:
        key = seg.pattern.tobytes()
        counts[key] = counts.get(key, 0) + 1
        if key not in first_seen:
            first_seen[key] = seg
    best_key = None
    best = (-1, 0)  # (multiplicity, -created_at) maximized
    for key, n in counts.items():
        cand = (n, -first_seen[key].created_at)
        if cand > best:
            best = cand
            best_key = key
    return first_seen[best_key].pattern, best[0]


def fos_potential(all_columns: list[ColumnSegments]) -> SynapticPotential:
    """Modal segment of the column with the most frequently occurring pattern.

    Columns with no segments are skipped; cross-column multiplicity ties go
    to the lowest column index.
    """
    best_pattern = None
    best_mult = 0
    best_col = -1
    for state in all_columns:
        if not state.segments:
            continue
        pattern, mult = _modal_segment(state)
        if mult > best_mult:
            best_pattern, best_mult, best_col = pattern, mult, state.column_index
    if best_pattern is None:
        raise EmptySegmentsError("no segments in any column")
    return SynapticPotential(pattern=np.array(best_pattern, copy=True),
                             rule=RULE_FOS, source_column=best_col)


def match_input(potential: SynapticPotential, sdr: np.ndarray,
                K_s: float) -> tuple[bool, float]:
    """Positional agreement between potential and input; matched when >= K_s."""
    accuracy = percent_accuracy(potential.pattern, sdr)
    return accuracy >= K_s, accuracy


@dataclass
class MemoryEntry:
    pattern: np.ndarray
    score: float
    stored_at: int


class MemoryStore:
    """Temporal log of matched patterns; duplicates are kept."""

    def __init__(self) -> None:
        self.entries: list[MemoryEntry] = []

    def __len__(self) -> int:
        return len(self.entries)

    def add(self, pattern: np.ndarray, score: float, t: int) -> None:
        if not 0.0 <= score <= 100.0:
            raise InvalidScoreError(f"score {score} outside [0, 100]")
        self.entries.append(MemoryEntry(np.array(pattern, dtype=np.uint8, copy=True),
                                        float(score), t))

    def predict(self, new_input: np.ndarray) -> tuple[np.ndarray, float]:
        """Stored pattern with the highest positional agreement to new_input.

        Agreement ties go to the most recently stored entry.
        """
        if not self.entries:
            raise EmptyStoreError("memory store is empty")
        new_input = np.asarray(new_input)
        best_pattern = None
        best_acc = -1.0
        for entry in self.entries:
            if entry.pattern.shape != new_input.shape:
                raise LengthMismatchError(
                    f"lengths {entry.pattern.size} vs {new_input.size}")
            acc = percent_accuracy(entry.pattern, new_input)
            if acc >= best_acc:  # >= so later (more recent) entries win ties
                best_acc = acc
                best_pattern = entry.pattern
        return best_pattern, best_acc


def store_match(store: MemoryStore, pattern: np.ndarray, score: float,
                t: int) -> MemoryStore:
    store.add(pattern, score, t)
    return store


def predict(store: MemoryStore, new_input: np.ndarray) -> tuple[np.ndarray, float]:
    return store.predict(new_input)
