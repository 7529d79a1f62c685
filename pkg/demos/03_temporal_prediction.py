"""Build temporal segments by hand and predict from the memory store.

A column accumulates the SDRs it won on as time-stamped segments. The
first-last rule ORs the first and last segments into a synaptic
potential; the frequent-occurring rule picks the modal segment across
all columns. Potentials that match the current input well enough land
in the memory store, which later answers predictions. Run:

    python demos/03_temporal_prediction.py
"""

import numpy as np

from rclt import (
    ColumnSegments,
    MemoryStore,
    fl_potential,
    fos_potential,
    insert_segment,
    match_input,
    percent_accuracy,
)


def bits(s):
    return np.array([int(ch) for ch in s], dtype=np.uint8)


def main():
    print("=== first-last potential ===")
    col = ColumnSegments(0)
    insert_segment(col, bits("11000000"), 1)
    insert_segment(col, bits("00110000"), 2)   # interior segments are ignored
    insert_segment(col, bits("00000011"), 3)
    pot = fl_potential(col)
    print("first segment: 11000000")
    print("last  segment: 00000011")
    print("potential    :", "".join(map(str, pot.pattern)), f"(rule={pot.rule})\n")

    print("=== frequent-occurring potential across columns ===")
    other = ColumnSegments(1)
    for t, s in enumerate(["01100000", "01100000", "01100000", "10000001"], start=1):
        insert_segment(other, bits(s), t)
    fos = fos_potential([col, other])
    print(f"column 1 saw 01100000 three times; fos picks it from column "
          f"{fos.source_column}: {''.join(map(str, fos.pattern))}\n")

    print("=== matching and the memory store ===")
    store = MemoryStore()
    incoming = bits("11000001")
    matched, score = match_input(pot, incoming, K_s=50.0)
    print(f"potential vs incoming agree on {score:.1f}% of positions "
          f"-> matched: {matched}")
    if matched:
        store.add(pot.pattern, score, t=4)
    store.add(bits("00110000"), 62.5, t=5)

    probe = bits("11000001")
    pattern, acc = store.predict(probe)
    print(f"store holds {len(store)} entries; probe 11000001 recalls "
          f"{''.join(map(str, pattern))} at {acc:.1f}%")
    print("(ties between equally-good entries go to the most recent one)")

    print("\nsegment timestamps must increase; replaying t=3 raises:")
    try:
        insert_segment(col, bits("11111111"), 3)
    except Exception as exc:
        print("   ", type(exc).__name__, "-", exc)

    print("\npositional accuracy counts agreeing zeros too:",
          percent_accuracy(bits("00000000"), bits("00000001")), "%")


if __name__ == "__main__":
    main()
