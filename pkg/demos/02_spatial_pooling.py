"""Watch the spatial pooler specialize a column onto a repeated input.

Eight columns start with random permanences. The same SDR is presented
repeatedly; the winning column's permanences rise at active bits and
fall elsewhere, so its overlap with the input grows while the other
columns stand still. Run from the repo root:

    python demos/02_spatial_pooling.py
"""

import numpy as np

from rclt import (
    EncoderConfig,
    NoiseConfig,
    density,
    encode,
    init_columns,
    select_winners,
    union_set,
    update_permanences,
)


def main():
    frame = np.arange(1.0, 26.0).reshape(5, 5)
    sdr = encode(frame, EncoderConfig())
    print("input SDR active bits:", np.flatnonzero(sdr).tolist())

    bank = init_columns(i_product=sdr.size, sparse_cols=8, K_p=0.5, seed=42)
    print(f"bank: {bank.count} columns x {bank.i_product} inputs, "
          f"initial connected density {density(bank.connected):.2f}\n")

    print(" t  winner  overlap  connected(winner)")
    for t in range(1, 9):
        winners = select_winners(bank, sdr, c=1, K_score=1)
        update_permanences(bank, winners, sdr)
        w = winners.indices[0]
        print(f"{t:2d}  {w:6d}  {winners.overlaps[0]:7d}  "
              f"{int(bank.connected[w].sum()):17d}")

    w = select_winners(bank, sdr, c=1, K_score=1).indices[0]
    print(f"\nafter training, column {w} is connected to every active input bit:",
          bool((bank.connected[w][sdr == 1] == 1).all()))
    print("losing columns were never touched; their permanences still sit in [0, 1)")

    # a big bank saturates the union, so show it on a 2-column bank instead
    small = init_columns(i_product=sdr.size, sparse_cols=2, K_p=0.5, seed=42)
    union = union_set(small)
    noisy = union_set(small, NoiseConfig(p_noise=0.2), rng_seed=5)
    print(f"\n2-column union set density {density(union):.2f}; "
          f"with p_noise=0.2 it rises to {density(noisy):.2f} "
          "(noise only turns zeros on)")


if __name__ == "__main__":
    main()
