"""Circuit configuration: every constant in one place, plus key=value I/O."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .encoder import ROW_MAJOR, RULE_FIRST_LAST, EncoderConfig


@dataclass
class CircuitConfig:
    """All circuit constants with gap-filling defaults.

    ro/co are the raw frame dimensions; the encoded vector length is
    floor(ro/K_o)*floor(co/K_o). rule selects both the encoder threshold
    rule and the temporal potential rule ("fl" or "fos"). K_score gates
    spatial winners, K_s (a percent) gates storage into the memory store.
    """

    ro: int = 10
    co: int = 10
    K_o: int = 1
    rule: str = RULE_FIRST_LAST
    k1: float = 1.0
    k2_low: float = 0.1
    k2_high: float = 0.2
    quantization_step: float = 0.05
    flatten_order: str = ROW_MAJOR
    K_p: float = 0.5
    sparse_cols: int = 8
    c: int = 1
    K_score: int = 1
    K_s: float = 50.0
    p_inc: float = 0.05
    p_dec: float = 0.01
    p_noise: float = 0.0
    seed: int = 42

    def validate(self) -> None:
        if self.ro < 1 or self.co < 1:
            raise ValueError(f"ro and co must be >= 1, got {self.ro}, {self.co}")
        self.encoder_config().validate()
        if self.ro // self.K_o == 0 or self.co // self.K_o == 0:
            raise ValueError(f"K_o={self.K_o} leaves no rows or columns of a {self.ro}x{self.co} frame")
        if not 0.0 <= self.K_p <= 1.0:
            raise ValueError(f"K_p must be in [0, 1], got {self.K_p}")
        if self.sparse_cols < 1 or self.c < 1:
            raise ValueError("sparse_cols and c must be >= 1")
        if self.K_score < 0:
            raise ValueError(f"K_score must be >= 0, got {self.K_score}")
        if not 0.0 <= self.K_s <= 100.0:
            raise ValueError(f"K_s must be in [0, 100], got {self.K_s}")
        if not 0.0 <= self.p_noise <= 1.0:
            raise ValueError(f"p_noise must be in [0, 1], got {self.p_noise}")

    def encoder_config(self) -> EncoderConfig:
        # the rule names are shared verbatim with EncoderConfig
        return EncoderConfig(
            K_o=self.K_o,
            rule=self.rule,
            k1=self.k1,
            k2_low=self.k2_low,
            k2_high=self.k2_high,
            quantization_step=self.quantization_step,
            flatten_order=self.flatten_order,
        )

    @property
    def encoded_rows(self) -> int:
        return self.ro // self.K_o

    @property
    def encoded_cols(self) -> int:
        return self.co // self.K_o

    @property
    def i_product(self) -> int:
        return self.encoded_rows * self.encoded_cols


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(CircuitConfig)}


def format_value(value) -> str:
    # repr round-trips floats exactly; ints and strings are plain
    if isinstance(value, float):
        return repr(value)
    return str(value)


def parse_value(name: str, raw: str):
    kind = _FIELD_TYPES[name]
    if kind == "int":
        return int(raw)
    if kind == "float":
        return float(raw)
    return raw


def config_to_pairs(cfg: CircuitConfig) -> list[tuple[str, str]]:
    """Deterministic (key, value) lines in declared field order."""
    return [(f.name, format_value(getattr(cfg, f.name)))
            for f in dataclasses.fields(CircuitConfig)]


def config_from_pairs(pairs: dict[str, str]) -> CircuitConfig:
    kwargs = {}
    for name, raw in pairs.items():
        if name not in _FIELD_TYPES:
            raise KeyError(f"unknown config key {name!r}")
        kwargs[name] = parse_value(name, raw)
    return CircuitConfig(**kwargs)


def parse_kv_lines(text: str) -> dict[str, str]:
    """Parse simple "key = value" lines; blank lines and # comments allowed."""
    out: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = stripped.partition("=")
        out[key.strip()] = value.strip()
    return out


def format_kv_lines(pairs: list[tuple[str, str]]) -> str:
    return "".join(f"{k} = {v}\n" for k, v in pairs)
