"""Circuit state archives, SDR bitmaps, and accuracy CSV export.

Archive format (line-oriented UTF-8, versioned by the leading magic):

    RCLT1
    config <key> <value>     one line per config field, declared order
    state last_t <t>
    perm <col> <p0> <p1> ... permanences, 6 fractional digits
    seg <col> <t> <bits>     one segment, bits as a 0/1 string
    mem <t> <score> <bits>   one memory-store entry, insertion order
    end

Text was chosen over binary for diffability and portability; byte output
is deterministic for a given circuit, so identical states produce
identical files.
"""

from __future__ import annotations

import numpy as np

from .circuit import Circuit
from .config import CircuitConfig, config_from_pairs, config_to_pairs
from .errors import BadMagicError, DimensionMismatchError, IoFailureError, ParseError
from .metrics import AccuracyRecord
from .spatial import ColumnBank
from .temporal import ColumnSegments, MemoryStore, Segment

MAGIC = "RCLT1"


def _bits_to_str(bits: np.ndarray) -> str:
    return "".join("1" if b else "0" for b in bits)


def _str_to_bits(text: str) -> np.ndarray:
    return np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")


def dump_state(circuit: Circuit) -> str:
    lines = [MAGIC]
    for key, value in config_to_pairs(circuit.cfg):
        lines.append(f"config {key} {value}")
    lines.append(f"state last_t {circuit.last_t}")
    for i in range(circuit.bank.count):
        perms = " ".join(f"{p:.6f}" for p in circuit.bank.permanences[i])
        lines.append(f"perm {i} {perms}")
    for cs in circuit.segments:
        for seg in cs.segments:
            lines.append(f"seg {cs.column_index} {seg.created_at} {_bits_to_str(seg.pattern)}")
    for entry in circuit.store.entries:
        lines.append(f"mem {entry.stored_at} {entry.score:.6f} {_bits_to_str(entry.pattern)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def save_state(circuit: Circuit, path) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dump_state(circuit))
    except OSError as exc:
        raise IoFailureError(f"{path}: {exc}") from exc


def parse_state(text: str) -> Circuit:
    lines = text.splitlines()
    if not lines or lines[0] != MAGIC:
        raise BadMagicError(f"expected leading {MAGIC!r} line")

    config_pairs: dict[str, str] = {}
    last_t = 0
    perms: dict[int, np.ndarray] = {}
    seg_lines: list[tuple[int, int, int, str]] = []   # (lineno, col, t, bits)
    mem_lines: list[tuple[int, int, float, str]] = []  # (lineno, t, score, bits)
    ended = False

    for lineno, line in enumerate(lines[1:], start=2):
        if ended:
            raise ParseError(lineno, "content after end marker")
        parts = line.split()
        if not parts:
            raise ParseError(lineno, "blank line")
        tag = parts[0]
        try:
            if tag == "config" and len(parts) == 3:
                config_pairs[parts[1]] = parts[2]
            elif tag == "state" and len(parts) == 3 and parts[1] == "last_t":
                last_t = int(parts[2])
            elif tag == "perm" and len(parts) >= 3:
                perms[int(parts[1])] = np.array([float(p) for p in parts[2:]], dtype=np.float64)
            elif tag == "seg" and len(parts) == 4:
                seg_lines.append((lineno, int(parts[1]), int(parts[2]), parts[3]))
            elif tag == "mem" and len(parts) == 4:
                mem_lines.append((lineno, int(parts[1]), float(parts[2]), parts[3]))
            elif tag == "end" and len(parts) == 1:
                ended = True
            else:
                raise ParseError(lineno, f"unrecognized record {line!r}")
        except (ValueError, KeyError) as exc:
            raise ParseError(lineno, f"bad value: {exc}") from exc

    if not ended:
        raise ParseError(len(lines) + 1, "missing end marker (truncated file?)")

    try:
        cfg = config_from_pairs(config_pairs)
        cfg.validate()
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(2, f"bad config block: {exc}") from exc

    n = cfg.i_product
    if sorted(perms) != list(range(cfg.sparse_cols)):
        raise ParseError(2, f"expected perm records for columns 0..{cfg.sparse_cols - 1}")
    matrix = np.empty((cfg.sparse_cols, n), dtype=np.float64)
    for i in range(cfg.sparse_cols):
        if perms[i].size != n:
            raise ParseError(2, f"column {i} has {perms[i].size} permanences, expected {n}")
        matrix[i] = perms[i]
    bank = ColumnBank(matrix, K_p=cfg.K_p, p_inc=cfg.p_inc, p_dec=cfg.p_dec, rng_seed=cfg.seed)

    segments = [ColumnSegments(i) for i in range(cfg.sparse_cols)]
    for lineno, col, t, bits in seg_lines:
        if not 0 <= col < cfg.sparse_cols:
            raise ParseError(lineno, f"segment column {col} out of range")
        if len(bits) != n:
            raise ParseError(lineno, f"segment has {len(bits)} bits, expected {n}")
        segments[col].segments.append(Segment(_str_to_bits(bits), t))

    store = MemoryStore()
    for lineno, t, score, bits in mem_lines:
        if len(bits) != n:
            raise ParseError(lineno, f"memory entry has {len(bits)} bits, expected {n}")
        store.add(_str_to_bits(bits), score, t)

    return Circuit(cfg, bank, segments, store, last_t=last_t)


def load_state(path) -> Circuit:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise IoFailureError(f"{path}: {exc}") from exc
    return parse_state(text)


def write_sdr_bitmap(sdr: np.ndarray, ro: int, co: int, path) -> None:
    """Plain PBM (P1) image of a bit vector reshaped to ro rows x co cols."""
    sdr = np.asarray(sdr)
    if ro * co != sdr.size:
        raise DimensionMismatchError(f"{ro}x{co} grid cannot hold {sdr.size} bits")
    grid = sdr.reshape(ro, co)
    body = "".join(" ".join(str(int(b)) for b in row) + "\n" for row in grid)
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(f"P1\n{co} {ro}\n{body}")
    except OSError as exc:
        raise IoFailureError(f"{path}: {exc}") from exc


def write_accuracy_csv(records: list[AccuracyRecord], path) -> None:
    """One row per step: header t,accuracy_percent; accuracy to one decimal."""
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write("t,accuracy_percent\n")
            for rec in records:
                fh.write(f"{rec.t},{rec.accuracy_percent:.1f}\n")
    except OSError as exc:
        raise IoFailureError(f"{path}: {exc}") from exc
