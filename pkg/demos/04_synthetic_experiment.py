"""Run the full circuit on a synthetic sequence with a mid-run perturbation.

The base frame repeats for five steps; at t=4 two of its 25 elements are
redrawn. Accuracy sits at 100 while the input is repeatable, dips when
the perturbation hits, and recovers the moment the original frame
returns. Equivalent CLI invocation:

    rclt run-synthetic --config <(echo "ro = 5
    co = 5
    seed = 43") --steps 5 --perturb-step 4 --perturb-fraction 0.08

Run from the repo root:

    python demos/04_synthetic_experiment.py
"""

from rclt import CircuitConfig, SyntheticSpec, gen_synthetic
from rclt.cli import run_circuit


def main():
    cfg = CircuitConfig(ro=5, co=5, seed=43)
    spec = SyntheticSpec(ro=5, co=5, steps=5, perturb_step=4,
                         perturb_fraction=0.08, seed=43)
    frames = gen_synthetic(spec)
    print(f"5 frames of {cfg.ro}x{cfg.co}; t=4 redraws "
          f"{int(0.08 * 25 + 0.999)} elements (seed {cfg.seed})\n")

    circuit, reports = run_circuit(cfg, frames)

    print(" t  accuracy  winner  store")
    for r in reports:
        winner = r.winners.indices[0] if r.winners else "-"
        print(f"{r.t:2d}  {r.accuracy_percent:8.1f}  {winner!s:>6}  "
              f"{len(circuit.store):5d}")

    dip = reports[3].accuracy_percent
    print(f"\nthe dip at t=4 ({dip:.1f}) measures how many SDR bits the two "
          "redrawn elements displaced;")
    print("recovery at t=5 is immediate because the original pattern is "
          "already in the memory store")

    segs = [len(cs.segments) for cs in circuit.segments]
    print(f"\nsegments per column after the run: {segs}")
    print("(a single column keeps winning the repeatable input)")


if __name__ == "__main__":
    main()
