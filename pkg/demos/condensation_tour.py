"""Walk every condensate family and print what each one leaves behind.

Run with: python3 demos/condensation_tour.py
"""

from cvstab.condense import (
    classify,
    composite_condensate,
    condense,
    double_condensate,
    even_k_condensate,
    flux_charge_condensate,
    flux_condensate,
)

CASES = [
    ("pure flux <(2pi, 0)>", flux_condensate()),
    ("flux + charge 2", flux_charge_condensate(2)),
    ("flux + charge 3", flux_charge_condensate(3)),
    ("composite <(2pi, 1)>", composite_condensate(1)),
    ("composite <(2pi, 2)>", composite_condensate(2)),
    ("double (1,2)", double_condensate(1, 2)),
    ("double (2,3)", double_condensate(2, 3)),
    ("even-K (1,1,2)", even_k_condensate(1, 1, 2)),
]


def main():
    width = max(len(name) for name, _ in CASES)
    for name, gens in CASES:
        out = condense(gens)
        tag = classify(out).tag
        gsd = out.gsd_torus if out.gsd_torus is not None else "continuous"
        print(f"{name:<{width}}  ->  {out.group_description:<12}"
              f" gsd={gsd!s:<10} {tag}")
        for g, s in zip(out.finite_generators,
                        out.finite_theory.generator_spins):
            print(f"{'':<{width}}      generator {g}: spin {s}")


if __name__ == "__main__":
    main()
