"""Crossover of the extremal harmonic pair against the root of the radius equation."""
import argparse
import itertools

from bohr_lab import harmonic as hm
from bohr_lab import radii as rd
from bohr_lab.radii import RadiusParams


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=200)
    args = ap.parse_args()

    print(f"{'m':>2} {'p':>4} {'k':>4} {'a':>4} {'root':>16} {'crossover':>16} {'gap':>9}")
    for m, p, k, a in itertools.product((1, 2), (1.0, 2.0), (0.0, 1.0), (0.3, 0.6, 0.9)):
        P = RadiusParams(p, k, m, a)
        root = rd.lambda_root_a(P)
        cross = hm.extremal_crossover(P, args.order)
        gap = max(abs(x - root) for x in cross.bracket)
        print(f"{m:2d} {p:4.1f} {k:4.1f} {a:4.1f} {root:16.12f} {cross.estimate:16.12f} {gap:9.1e}")


if __name__ == "__main__":
    main()
