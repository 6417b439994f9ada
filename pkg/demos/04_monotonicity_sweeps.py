"""How the eigenvalue responds to interventions.

Two directions are provable and asserted by the sweep driver: stronger
pulses (smaller g'(0)) raise lambda1, and larger habitats lower it.  The
habitat-rate sweep is exploratory: the toolkit only reports the values,
which for these rates decrease as the oscillation amplitude grows.

Writes sweep.csv files under demos/out/sweeps/.
"""

import math
from pathlib import Path

from evopulse import SweepSpec, parse_config_text
from evopulse.runner import run_sweep

OUT = Path(__file__).parent / "out" / "sweeps"
BASE = parse_config_text("preset=example1\nN=96\nsteps_per_period=1500\n")


def show(label, spec, outdir):
    outcome = run_sweep(spec, outdir)
    pts = "  ".join(f"{v:g}: {lam:+.4f}" for v, lam in zip(outcome.values, outcome.lambdas))
    status = {True: "holds", False: "VIOLATED", None: "not asserted"}[outcome.assertion_passed]
    print(f"{label}\n   {pts}\n   monotonicity: {status}")


def main():
    show("pulse slope g'(0) in {1.0, 0.9, 0.8, 0.7}",
         SweepSpec("gprime0_scale", (1.0, 0.9, 0.8, 0.7), BASE), OUT / "gprime0")
    show("habitat length L in {pi/2, pi, 2 pi}",
         SweepSpec("domain_length", (math.pi / 2, math.pi, 2 * math.pi), BASE),
         OUT / "domain")
    show("habitat oscillation exponent B in {0.0, 0.05, 0.1} (tau-periodic scaling)",
         SweepSpec("rho_exponent", (0.0, 0.05, 0.1), BASE), OUT / "rho")
    print(f"CSV outputs under {OUT}")


if __name__ == "__main__":
    main()
