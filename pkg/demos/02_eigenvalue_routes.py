"""Four independent routes to the principal eigenvalue.

For a fixed habitat without pulse damping there is a closed form; the
period-map power iteration and the adjoint iteration must land on it, and
for evolving habitats the mean of rho^-2 gives closed-form bounds.  This
script prints all of them side by side for the worked presets.
"""

from evopulse import (adjoint_lambda1, classify_threshold, exact_lambda1_fixed,
                      lambda1_lower_bound, lambda1_upper_bound, parse_config_text,
                      power_iteration_lambda1)


def main():
    for name in ("example1", "example2", "example3_fixed", "example4_fixed"):
        cfg = parse_config_text(f"preset={name}\n")
        p = cfg.params()
        power = power_iteration_lambda1(p, cfg.eigen_config())
        adj = adjoint_lambda1(p, cfg.eigen_config())
        exact = exact_lambda1_fixed(p)
        print(f"{name:17s} power {power.lambda1:+.5f} ({power.iterations} iters)  "
              f"adjoint {adj.lambda1:+.5f}  exact {exact:+.5f}  "
              f"-> {classify_threshold(power)}")

    print()
    p3 = parse_config_text("preset=example3_evolving\n").params()
    print(f"example3_evolving: growing habitat, lambda1 <= {lambda1_upper_bound(p3):+.5f} "
          f"(persistence despite extinction on the fixed habitat)")
    p4 = parse_config_text("preset=example4_evolving\n").params()
    print(f"example4_evolving: shrinking habitat, lambda1 >= {lambda1_lower_bound(p4):+.5f} "
          f"(extinction despite persistence on the fixed habitat)")


if __name__ == "__main__":
    main()
