"""Bracketing the positive periodic state by monotone iteration.

With lambda1 < 0 the pulsed system settles into a unique positive periodic
orbit.  Seeding the sweep from a constant upper level makes the iterates
decrease; seeding from a small multiple of the eigenfunction envelope makes
them increase; both limits coincide, and the limit reproduces itself under
one pulsed period of the time stepper.

Uses a reduced grid so the demo finishes in a few seconds; CSVs land in
demos/out/steady/.
"""

from pathlib import Path

import numpy as np

from evopulse import (build_lower_solution, monotone_iterate, parse_config_text,
                      period_evolution_defect, power_iteration_lambda1, upper_seed,
                      write_periodic_csv, write_trace_csv)

OUT = Path(__file__).parent / "out" / "steady"


def main():
    cfg = parse_config_text("preset=example2\nimpulse=beverton_holt\nm2=9\na2=10\n"
                            "N=96\nsteps_per_period=1500\n")
    p = cfg.params()
    eig = power_iteration_lambda1(p, cfg.eigen_config())
    print(f"lambda1 = {eig.lambda1:+.4f} (negative: a positive periodic state exists)")

    scfg = cfg.steady_config()
    up = upper_seed(p, scfg, u0_max=cfg["u0_amp"], v0_max=cfg["v0_amp"])
    lo = build_lower_solution(p, eig, scfg, upper=up)
    print(f"upper seed: constant levels ({up.u[0, 0]:.0f}, {up.v[0, 0]:.1f}); "
          f"lower seed: eigenfunction envelope scaled by {lo.epsilon:g}")

    sol_up, tr_up = monotone_iterate(p, up, scfg)
    sol_lo, tr_lo = monotone_iterate(p, lo, scfg)
    agree = max(np.max(np.abs(sol_up.u - sol_lo.u)), np.max(np.abs(sol_up.v - sol_lo.v)))
    print(f"upper sweep: {tr_up.iterations} iterations, norms decreasing "
          f"{tr_up.sup_u[0]:.1f} -> {tr_up.sup_u[-1]:.2f}")
    print(f"lower sweep: {tr_lo.iterations} iterations, norms increasing "
          f"{tr_lo.sup_u[0]:.4f} -> {tr_lo.sup_u[-1]:.2f}")
    print(f"limits agree to {agree:.2e}; one pulsed period reproduces the limit "
          f"to {period_evolution_defect(p, sol_up, scfg):.2e}")

    OUT.mkdir(parents=True, exist_ok=True)
    write_periodic_csv(sol_up, cfg.grid().x, OUT / "steady_upper.csv")
    write_periodic_csv(sol_lo, cfg.grid().x, OUT / "steady_lower.csv")
    write_trace_csv(tr_up, OUT / "trace_upper.csv")
    write_trace_csv(tr_lo, OUT / "trace_lower.csv")
    print(f"CSV outputs under {OUT}")


if __name__ == "__main__":
    main()
