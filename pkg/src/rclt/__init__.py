"""Reduced cortical learning circuit: SDR encoding, pooling, prediction.

A numpy implementation of a compact cortical-learning pipeline. Frames
(synthetic matrices or audio windows) are encoded to sparse distributed
representations, pooled through permanence-gated columns, stored as
temporal segments, and matched against a memory store to predict the
next input.
"""

from .circuit import Circuit, StepReport
from .config import (
    CircuitConfig,
    config_from_pairs,
    config_to_pairs,
    format_kv_lines,
    parse_kv_lines,
)
from .datasets import (
    AudioStream,
    SyntheticSpec,
    bundled_wav_path,
    frame_audio,
    gen_synthetic,
    load_wav,
)
from .encoder import (
    COLUMN_MAJOR,
    ROW_MAJOR,
    RULE_FIRST_LAST,
    RULE_FREQUENT,
    EncoderConfig,
    NormalizedFrame,
    RuleThreshold,
    binarize,
    encode,
    normalize,
    resize,
    select_threshold,
)
from .errors import (
    BadMagicError,
    CorruptFileError,
    DimensionMismatchError,
    EmptyResultError,
    EmptySegmentsError,
    EmptyStoreError,
    InvalidScoreError,
    IoFailureError,
    LengthMismatchError,
    NonMonotonicTimeError,
    ParseError,
    RcltError,
    UnsupportedFormatError,
    ZeroFrameError,
)
from .metrics import AccuracyRecord, active_overlap_ratio, density, percent_accuracy
from .persistence import (
    dump_state,
    load_state,
    parse_state,
    save_state,
    write_accuracy_csv,
    write_sdr_bitmap,
)
from .spatial import (
    Column,
    ColumnBank,
    NoiseConfig,
    WinnerSet,
    init_columns,
    overlap,
    select_winners,
    union_set,
    update_permanences,
)
from .temporal import (
    ColumnSegments,
    MemoryEntry,
    MemoryStore,
    Segment,
    SynapticPotential,
    fl_potential,
    fos_potential,
    insert_segment,
    match_input,
    predict,
    store_match,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyRecord",
    "AudioStream",
    "BadMagicError",
    "COLUMN_MAJOR",
    "Circuit",
    "CircuitConfig",
    "Column",
    "ColumnBank",
    "ColumnSegments",
    "CorruptFileError",
    "DimensionMismatchError",
    "EmptyResultError",
    "EmptySegmentsError",
    "EmptyStoreError",
    "EncoderConfig",
    "InvalidScoreError",
    "IoFailureError",
    "LengthMismatchError",
    "MemoryEntry",
    "MemoryStore",
    "NoiseConfig",
    "NonMonotonicTimeError",
    "NormalizedFrame",
    "ParseError",
    "ROW_MAJOR",
    "RULE_FIRST_LAST",
    "RULE_FREQUENT",
    "RcltError",
    "RuleThreshold",
    "Segment",
    "StepReport",
    "SynapticPotential",
    "SyntheticSpec",
    "UnsupportedFormatError",
    "WinnerSet",
    "ZeroFrameError",
    "active_overlap_ratio",
    "binarize",
    "bundled_wav_path",
    "config_from_pairs",
    "config_to_pairs",
    "density",
    "dump_state",
    "encode",
    "fl_potential",
    "format_kv_lines",
    "fos_potential",
    "frame_audio",
    "gen_synthetic",
    "init_columns",
    "insert_segment",
    "load_state",
    "load_wav",
    "match_input",
    "normalize",
    "overlap",
    "parse_kv_lines",
    "parse_state",
    "percent_accuracy",
    "predict",
    "resize",
    "save_state",
    "select_threshold",
    "select_winners",
    "store_match",
    "union_set",
    "update_permanences",
    "write_accuracy_csv",
    "write_sdr_bitmap",
]
