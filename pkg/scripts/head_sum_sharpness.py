"""Crossover of |a_0|^p + sum |a_k| r^k for omega_a against the predicted r_p(a)."""
import argparse

from bohr_lab import families as fam
from bohr_lab import quasisub as qs
from bohr_lab import radii as rd


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=200)
    ap.add_argument("--ps", default="0.5,1,2")
    ap.add_argument("--as", dest="as_", default="0.7,0.9", help="values of a besides C(p)")
    args = ap.parse_args()

    print(f"{'p':>5} {'a':>14} {'r_p(a)':>16} {'crossover':>16} {'gap':>10}")
    worst = 0.0
    for p in (float(v) for v in args.ps.split(",")):
        for a in [rd.C_p(p)] + [float(v) for v in args.as_.split(",")]:
            w = fam.disk_automorphism(a, args.order)
            cross = qs.sharpness_scan(lambda r: qs.bohr_head_sum(w, p, r), 1.0, 0.01, 0.99)
            target = float(rd.r_p(p, a))
            gap = max(abs(x - target) for x in cross.bracket)
            worst = max(worst, gap)
            print(f"{p:5.2f} {a:14.10f} {target:16.12f} {cross.estimate:16.12f} {gap:10.2e}")
    print(f"max gap {worst:.2e}")


if __name__ == "__main__":
    main()
