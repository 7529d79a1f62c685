"""Spatial pooler: permanence-backed columns, overlap, winners, Hebbian updates."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LengthMismatchError

_U64 = 1 << 64


def _column_rng(seed: int, index: int) -> np.random.Generator:
    """PCG64 stream for one column, derived from (seed, column index).

    The derivation is fixed so identically-seeded banks reproduce
    bit-for-bit anywhere numpy's PCG64 is available.
    """
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed % _U64, index])))


@dataclass
class Column:
    """One column's permanence vector and its thresholded connection pattern."""

    permanences: np.ndarray
    connected: np.ndarray


@dataclass
class NoiseConfig:
    """Probability that an inactive union bit flips on (default: no noise)."""

    p_noise: float = 0.0

    def validate(self) -> None:
        if not 0.0 <= self.p_noise <= 1.0:
            raise ValueError(f"p_noise must be in [0, 1], got {self.p_noise}")


@dataclass
class WinnerSet:
    """Columns that cleared K_score, best overlap first, lowest index on ties."""

    indices: list[int] = field(default_factory=list)
    overlaps: list[int] = field(default_factory=list)
    c: int = 1
    K_score: int = 0

    def __bool__(self) -> bool:
        return bool(self.indices)


class ColumnBank:
    """Bank of columns over a fixed input length.

    Permanences live in a (count, i_product) matrix; connected patterns are
    recomputed from the K_p threshold after every update. Mutating
    operations require exclusive access.
    """

    def __init__(self, permanences: np.ndarray, K_p: float, p_inc: float,
                 p_dec: float, rng_seed: int):
        self.permanences = permanences
        self.K_p = K_p
        self.p_inc = p_inc
        self.p_dec = p_dec
        self.rng_seed = rng_seed
        self.connected = (permanences > K_p).astype(np.uint8)

    @property
    def count(self) -> int:
        return self.permanences.shape[0]

    @property
    def i_product(self) -> int:
        return self.permanences.shape[1]

    def column(self, index: int) -> Column:
        return Column(self.permanences[index], self.connected[index])

    def _refresh_connected(self, index: int) -> None:
        self.connected[index] = (self.permanences[index] > self.K_p).astype(np.uint8)


def init_columns(i_product: int, sparse_cols: int, K_p: float, seed: int,
                 p_inc: float = 0.05, p_dec: float = 0.01) -> ColumnBank:
    """Draw each column's permanences uniformly from [0, 1).

    Column i uses its own PCG64 stream seeded from (seed, i); identical
    seeds reproduce identical banks.
    """
    if i_product < 1 or sparse_cols < 1:
        raise ValueError("i_product and sparse_cols must be positive")
    if not 0.0 <= K_p <= 1.0:
        raise ValueError(f"K_p must be in [0, 1], got {K_p}")
    perms = np.empty((sparse_cols, i_product), dtype=np.float64)
    for i in range(sparse_cols):
        perms[i] = _column_rng(seed, i).random(i_product)
    return ColumnBank(perms, K_p=K_p, p_inc=p_inc, p_dec=p_dec, rng_seed=seed)


def union_set(bank: ColumnBank, noise: NoiseConfig | None = None,
              rng_seed: int = 0) -> np.ndarray:
    """OR of every column's connection pattern, with optional 0->1 bit noise."""
    noise = noise or NoiseConfig()
    noise.validate()
    union = (bank.connected.max(axis=0)).astype(np.uint8)
    if noise.p_noise > 0.0:
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([rng_seed % _U64])))
        flips = (rng.random(union.size) < noise.p_noise) & (union == 0)
        union[flips] = 1
    return union


def overlap(column: Column, sdr: np.ndarray) -> int:
    """Count of positions active in both the column's connections and the input."""
    sdr = np.asarray(sdr)
    if column.connected.shape != sdr.shape:
        raise LengthMismatchError(f"lengths {column.connected.size} vs {sdr.size}")
    return int(np.count_nonzero(column.connected & sdr.astype(np.uint8)))


def select_winners(bank: ColumnBank, sdr: np.ndarray, c: int, K_score: int) -> WinnerSet:
    """Top c columns by overlap with the input, gated by K_score.

    May return fewer than c (including none). Ties break to the lowest
    column index, making selection reproducible.
    """
    sdr = np.asarray(sdr).astype(np.uint8)
    if sdr.size != bank.i_product:
        raise LengthMismatchError(f"lengths {bank.i_product} vs {sdr.size}")
    overlaps = (bank.connected & sdr).sum(axis=1, dtype=np.int64)
    qualified = [i for i in range(bank.count) if overlaps[i] >= K_score]
    qualified.sort(key=lambda i: (-overlaps[i], i))
    top = qualified[:c]
    return WinnerSet(indices=top, overlaps=[int(overlaps[i]) for i in top],
                     c=c, K_score=K_score)


def update_permanences(bank: ColumnBank, winners: WinnerSet, sdr: np.ndarray) -> ColumnBank:
    """Hebbian update on winning columns only, in place.

    Permanences rise by p_inc at active input bits, fall by p_dec at
    inactive ones, clamp to [0, 1]; connection patterns are re-thresholded.
    Losing columns are untouched.
    """
    sdr = np.asarray(sdr).astype(bool)
    for i in winners.indices:
        perms = bank.permanences[i]
        perms[sdr] += bank.p_inc
        perms[~sdr] -= bank.p_dec
        np.clip(perms, 0.0, 1.0, out=perms)
        bank._refresh_connected(i)
    return bank
