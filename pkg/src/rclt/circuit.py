"""The full learning circuit: encoder -> spatial pooler -> temporal pooler.

One `step` consumes an analog frame at time t, learns, and reports the
matched SDR plus its positional accuracy against the input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import CircuitConfig
from .encoder import encode
from .errors import NonMonotonicTimeError
from .metrics import percent_accuracy
from .spatial import ColumnBank, WinnerSet, init_columns, select_winners, update_permanences
from .temporal import ColumnSegments, MemoryStore, fl_potential, fos_potential, match_input


@dataclass
class StepReport:
    t: int
    input_sdr: np.ndarray
    matched_sdr: np.ndarray
    accuracy_percent: float
    winners: WinnerSet


class Circuit:
    """Single-owner mutable state machine; run steps strictly in time order."""

    def __init__(self, cfg: CircuitConfig, bank: ColumnBank,
                 segments: list[ColumnSegments], store: MemoryStore, last_t: int = 0):
        self.cfg = cfg
        self.bank = bank
        self.segments = segments
        self.store = store
        self.last_t = last_t

    @classmethod
    def from_config(cls, cfg: CircuitConfig) -> "Circuit":
        cfg.validate()
        bank = init_columns(cfg.i_product, cfg.sparse_cols, cfg.K_p, cfg.seed,
                            p_inc=cfg.p_inc, p_dec=cfg.p_dec)
        segments = [ColumnSegments(i) for i in range(cfg.sparse_cols)]
        return cls(cfg, bank, segments, MemoryStore())

    def step(self, frame: np.ndarray, t: int) -> StepReport:
        """Encode, pool, learn, and predict for one time step.

        Every winning column stores the input SDR as a new segment. The
        synaptic potential comes from the best winner's first/last segments
        (fl rule) or the most frequent segment across all columns (fos
        rule); a qualifying match (>= K_s) lands in the memory store. The
        matched SDR is the store's best prediction, falling back to the
        potential (then all-zeros) while the store is empty.
        """
        if t <= self.last_t:
            raise NonMonotonicTimeError(f"t={t} not after last step t={self.last_t}")
        cfg = self.cfg
        sdr = encode(frame, cfg.encoder_config())

        winners = select_winners(self.bank, sdr, cfg.c, cfg.K_score)
        update_permanences(self.bank, winners, sdr)

        potential = None
        if winners.indices:
            for i in winners.indices:
                self.segments[i].insert(sdr, t)
            if cfg.rule == "fl":
                potential = fl_potential(self.segments[winners.indices[0]])
            else:
                potential = fos_potential(self.segments)
            matched, score = match_input(potential, sdr, cfg.K_s)
            if matched:
                self.store.add(potential.pattern, score, t)

        if len(self.store):
            matched_sdr, _ = self.store.predict(sdr)
        elif potential is not None:
            matched_sdr = potential.pattern
        else:
            matched_sdr = np.zeros_like(sdr)

        self.last_t = t
        return StepReport(
            t=t,
            input_sdr=sdr,
            matched_sdr=np.array(matched_sdr, copy=True),
            accuracy_percent=percent_accuracy(sdr, matched_sdr),
            winners=winners,
        )
