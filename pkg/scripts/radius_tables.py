"""Print the closed-form radii and the roots of the radius equations as CSV."""
import argparse
import csv
import sys

import numpy as np

from bohr_lab import radii as rd
from bohr_lab.radii import RadiusParams


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ps", default="0.5,1,1.5,2", help="comma list of exponents p")
    ap.add_argument("--ks", default="0,0.5,1", help="comma list of dilatation bounds k")
    ap.add_argument("--ms", default="1,2,3", help="comma list of powers m")
    ap.add_argument("--a-points", type=int, default=5)
    args = ap.parse_args()

    ps_ = [float(v) for v in args.ps.split(",")]
    ks = [float(v) for v in args.ks.split(",")]
    ms = [int(v) for v in args.ms.split(",")]
    as_ = np.linspace(0.0, 0.9, args.a_points)

    w = csv.writer(sys.stdout)
    w.writerow(["p", "k", "m", "a", "r_p(a)", "lambda_root_a", "lambda_root", "eq12", "eq13"])
    for p in ps_:
        for k in ks:
            for m in ms:
                univ = rd.lambda_root(RadiusParams(p, k, m))
                for a in as_:
                    P = RadiusParams(p, k, m, float(a))
                    w.writerow([p, k, m, f"{a:.4f}", f"{rd.r_p(p, float(a)):.12f}",
                                f"{rd.lambda_root_a(P):.12f}", f"{univ:.12f}",
                                f"{rd.r_k_p_closed(P):.12f}", f"{rd.corollary6_radius(p, k):.12f}"])


if __name__ == "__main__":
    main()
