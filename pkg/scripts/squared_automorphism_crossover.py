"""Majorant crossover of z^2 ((z-a)/(1-az))^2 against z^2 as a approaches 1.

The lower reference r_1(a^2) = 1/(1+2a^2) and the upper reference alpha_+(a)
both tend to 1/3; the crossover sits between them.
"""
import argparse

from bohr_lab import quasisub as qs
from bohr_lab import radii as rd


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=200)
    ap.add_argument("--as", dest="as_", default="0.75,0.8,0.9,0.95,0.99,0.995,0.999")
    args = ap.parse_args()

    print(f"{'a':>7} {'N':>5} {'r_1(a^2)':>14} {'crossover':>14} {'alpha_+':>14}")
    for a in (float(v) for v in args.as_.split(",")):
        order = max(args.order, 40 * qs.sign_change_index(a))
        cross = qs.corollary2_crossover(a, order)
        print(f"{a:7.4f} {qs.sign_change_index(a):5d} {rd.r_1_closed(a * a):14.10f} "
              f"{cross.estimate:14.10f} {rd.alpha_plus(a):14.10f}")


if __name__ == "__main__":
    main()
