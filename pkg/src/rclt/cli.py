"""Experiment runner: synthetic and audio runs plus archive inspection.

Each run writes into its output directory: the resolved config
(config.txt), accuracy.csv, one input/matched PBM pair per step, and the
final state archive (state.rclt). Flags override config-file values,
which override per-mode defaults. RCLT_OUT overrides the default output
directory.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .circuit import Circuit, StepReport
from .config import (
    CircuitConfig,
    config_from_pairs,
    config_to_pairs,
    format_kv_lines,
    format_value,
    parse_kv_lines,
)
from .datasets import SyntheticSpec, frame_audio, gen_synthetic, load_wav
from .errors import RcltError
from .metrics import AccuracyRecord, active_overlap_ratio, density
from .persistence import load_state, save_state, write_accuracy_csv, write_sdr_bitmap


@dataclass
class RunConfig:
    """Circuit constants plus dataset and output parameters for one run."""

    circuit: CircuitConfig
    steps: int = 5
    base_pattern: str = "ramp"
    perturb_step: int = 0
    perturb_fraction: float = 0.0
    hop: int = 0  # 0 resolves to the window size ro*co
    wav: str = ""
    out: str = ""
    verbose: int = 0

    _RUN_FIELDS = ("steps", "base_pattern", "perturb_step", "perturb_fraction",
                   "hop", "wav", "out", "verbose")

    def to_pairs(self) -> list[tuple[str, str]]:
        pairs = config_to_pairs(self.circuit)
        for name in self._RUN_FIELDS:
            pairs.append((name, format_value(getattr(self, name))))
        return pairs


_RUN_FIELD_TYPES = {"steps": int, "base_pattern": str, "perturb_step": int,
                    "perturb_fraction": float, "hop": int, "wav": str,
                    "out": str, "verbose": int}


def resolve_run_config(mode: str, file_pairs: dict[str, str],
                       flag_pairs: dict[str, str]) -> RunConfig:
    """Layer per-mode defaults, then config-file values, then flags."""
    circuit_defaults = CircuitConfig()
    if mode == "audio":
        circuit_defaults = CircuitConfig(ro=20, co=20)
    merged: dict[str, str] = {}
    merged.update(file_pairs)
    merged.update(flag_pairs)

    circuit_keys = {f.name for f in dataclasses.fields(CircuitConfig)}
    circuit_pairs = {}
    run_kwargs = {}
    for key, raw in merged.items():
        if key in circuit_keys:
            circuit_pairs[key] = raw
        elif key in _RUN_FIELD_TYPES:
            run_kwargs[key] = _RUN_FIELD_TYPES[key](raw)
        else:
            raise ValueError(f"unknown config key {key!r}")

    base_pairs = {k: v for k, v in config_to_pairs(circuit_defaults)}
    base_pairs.update(circuit_pairs)
    circuit = config_from_pairs(base_pairs)
    return RunConfig(circuit=circuit, **run_kwargs)


def run_circuit(cfg: CircuitConfig, frames, verbose: bool = False) -> tuple[Circuit, list[StepReport]]:
    """Drive a fresh circuit over the frame sequence, t = 1, 2, ..."""
    circuit = Circuit.from_config(cfg)
    reports = []
    for t, frame in enumerate(frames, start=1):
        report = circuit.step(frame, t)
        if verbose:
            print(f"t={t} accuracy={report.accuracy_percent:.1f} "
                  f"overlap_ratio={active_overlap_ratio(report.input_sdr, report.matched_sdr):.1f} "
                  f"winners={report.winners.indices}")
        reports.append(report)
    return circuit, reports


def write_run_outputs(out_dir: Path, rc: RunConfig, circuit: Circuit,
                      reports: list[StepReport]) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "config.txt").write_text(format_kv_lines(rc.to_pairs()), encoding="utf-8")
    records = [AccuracyRecord(r.t, r.accuracy_percent) for r in reports]
    write_accuracy_csv(records, out_dir / "accuracy.csv")
    er, ec = circuit.cfg.encoded_rows, circuit.cfg.encoded_cols
    for r in reports:
        write_sdr_bitmap(r.input_sdr, er, ec, out_dir / f"input_t{r.t:03d}.pbm")
        write_sdr_bitmap(r.matched_sdr, er, ec, out_dir / f"matched_t{r.t:03d}.pbm")
    save_state(circuit, out_dir / "state.rclt")


def _resolve_out_dir(rc: RunConfig) -> Path:
    if rc.out:
        return Path(rc.out)
    return Path(os.environ.get("RCLT_OUT", "rclt_out"))


def run_synthetic(rc: RunConfig) -> int:
    """Generate synthetic frames, run the circuit, write all artifacts."""
    try:
        cfg = rc.circuit
        cfg.validate()
        spec = SyntheticSpec(ro=cfg.ro, co=cfg.co, steps=rc.steps,
                             base_pattern=rc.base_pattern,
                             perturb_step=rc.perturb_step,
                             perturb_fraction=rc.perturb_fraction,
                             seed=cfg.seed)
        frames = gen_synthetic(spec)
        circuit, reports = run_circuit(cfg, frames, verbose=bool(rc.verbose))
        write_run_outputs(_resolve_out_dir(rc), rc, circuit, reports)
    except (RcltError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def run_audio(rc: RunConfig, wav_path: str) -> int:
    """Frame a WAV file, run the circuit, write all artifacts."""
    try:
        cfg = rc.circuit
        cfg.validate()
        stream = load_wav(wav_path)
        hop = rc.hop if rc.hop > 0 else cfg.ro * cfg.co
        frames = frame_audio(stream, cfg.ro, cfg.co, hop)
        circuit, reports = run_circuit(cfg, frames, verbose=bool(rc.verbose))
        write_run_outputs(_resolve_out_dir(rc), rc, circuit, reports)
    except (RcltError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def format_state_summary(circuit: Circuit) -> str:
    lines = [f"columns: {circuit.bank.count}",
             f"i_product: {circuit.bank.i_product}",
             f"last_t: {circuit.last_t}"]
    for i in range(circuit.bank.count):
        lines.append(f"column {i}: connected_density={density(circuit.bank.connected[i]):.6f} "
                     f"segments={len(circuit.segments[i].segments)}")
    lines.append(f"memory_store: {len(circuit.store)}")
    return "\n".join(lines) + "\n"


def inspect_state(archive_path: str) -> int:
    """Print column, segment, and memory-store statistics for an archive."""
    try:
        circuit = load_state(archive_path)
    except RcltError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(format_state_summary(circuit))
    return 0


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="key = value config file")
    parser.add_argument("--out", metavar="DIR", help="output directory")
    parser.add_argument("--seed", type=int, metavar="N")
    parser.add_argument("--rule", choices=["fl", "fos"])
    parser.add_argument("--verbose", action="store_true")


def _flag_pairs(args: argparse.Namespace) -> dict[str, str]:
    pairs: dict[str, str] = {}
    if args.out is not None:
        pairs["out"] = args.out
    if args.seed is not None:
        pairs["seed"] = str(args.seed)
    if args.rule is not None:
        pairs["rule"] = args.rule
    if args.verbose:
        pairs["verbose"] = "1"
    if getattr(args, "wav", None) is not None:
        pairs["wav"] = args.wav
    if getattr(args, "steps", None) is not None:
        pairs["steps"] = str(args.steps)
    if getattr(args, "perturb_step", None) is not None:
        pairs["perturb_step"] = str(args.perturb_step)
    if getattr(args, "perturb_fraction", None) is not None:
        pairs["perturb_fraction"] = str(args.perturb_fraction)
    return pairs


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="rclt", description="Cortical learning circuit experiment runner")
    sub = parser.add_subparsers(dest="command", required=True)

    p_syn = sub.add_parser("run-synthetic", help="run on a generated frame sequence")
    _add_common_flags(p_syn)
    p_syn.add_argument("--steps", type=int, metavar="N")
    p_syn.add_argument("--perturb-step", type=int, dest="perturb_step", metavar="N")
    p_syn.add_argument("--perturb-fraction", type=float, dest="perturb_fraction", metavar="F")

    p_aud = sub.add_parser("run-audio", help="run on a 16-bit PCM mono WAV file")
    _add_common_flags(p_aud)
    p_aud.add_argument("--wav", metavar="PATH")

    p_ins = sub.add_parser("inspect", help="summarize a state archive")
    p_ins.add_argument("archive", metavar="PATH")

    args = parser.parse_args(argv)

    if args.command == "inspect":
        return inspect_state(args.archive)

    try:
        file_pairs = {}
        if args.config:
            file_pairs = parse_kv_lines(Path(args.config).read_text(encoding="utf-8"))
        mode = "audio" if args.command == "run-audio" else "synthetic"
        rc = resolve_run_config(mode, file_pairs, _flag_pairs(args))
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.command == "run-audio":
        if not rc.wav:
            print("error: run-audio needs --wav PATH or a wav config entry", file=sys.stderr)
            return 1
        return run_audio(rc, rc.wav)
    return run_synthetic(rc)
