"""Walk a single analog frame through the SDR encoding pipeline.

Shows both threshold rules on the same frames: the first-last rule keys
off the corner values of the flattened frame, the frequent-occurring
rule keys off the modal quantized value. Run from the repo root:

    python demos/01_sdr_encoding.py
"""

import numpy as np

from rclt import (
    EncoderConfig,
    RULE_FREQUENT,
    binarize,
    density,
    encode,
    normalize,
    select_threshold,
)


def show_grid(label, bits, shape):
    print(f"{label} (density {density(bits):.2f})")
    for row in bits.reshape(shape):
        print("   ", " ".join("#" if b else "." for b in row))


def main():
    print("=== ramp frame, first-last rule ===")
    frame = np.arange(1.0, 26.0).reshape(5, 5)
    print("frame:\n", frame)

    norm = normalize(frame)
    print(f"max_abs = {norm.max_abs}, normalized corner values "
          f"{norm.values[0, 0]:.3f} .. {norm.values[-1, -1]:.3f}")

    cfg = EncoderConfig()
    thr = select_threshold(norm, cfg)
    print(f"x_first = {thr.x_first:.3f}, x_last = {thr.x_last:.3f}, x_f = {thr.x_f:.3f}")

    sdr = binarize(norm, thr, cfg)
    show_grid("first-last SDR", sdr, (5, 5))
    print("active bits survive the sparsity cap: the", int(sdr.sum()),
          "largest values of 24 that cleared the threshold\n")

    print("=== checker frame, frequent-occurring rule ===")
    r, c = np.indices((5, 5))
    checker = np.where((r + c) % 2 == 0, 1.0, 2.0)
    sdr_fos = encode(checker, EncoderConfig(rule=RULE_FREQUENT))
    show_grid("frequent-occurring SDR", sdr_fos, (5, 5))
    print("the mode is the thirteen 0.5 cells; only 1.0 cells exceed it\n")

    print("=== scale invariance ===")
    for alpha in (0.5, 2.0, 10.0):
        same = np.array_equal(encode(alpha * frame, cfg), encode(frame, cfg))
        print(f"encode({alpha:>4} * frame) == encode(frame): {same}")

    print("\n=== resize before encoding ===")
    big = np.arange(1.0, 101.0).reshape(10, 10)
    sdr_small = encode(big, EncoderConfig(K_o=2))
    print(f"10x10 frame with K_o=2 encodes to {sdr_small.size} bits "
          f"({int(sdr_small.sum())} active)")


if __name__ == "__main__":
    main()
