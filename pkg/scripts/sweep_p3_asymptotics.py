"""Track the p=3 replacement roots as t grows and compare the middle pair with its limit."""

import argparse

import numpy as np

from niep.construct import p3_lambda_limits, p3_replace


def parse_args(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rho", type=float, default=2.0)
    ap.add_argument("--alpha", type=float, default=0.0)
    ap.add_argument("--beta", type=float, default=1.0)
    ap.add_argument("--a", type=float, default=0.0)
    ap.add_argument("--eta", type=float, default=1.0)
    ap.add_argument("--decades", type=int, default=6, help="t runs over 10^0 .. 10^decades")
    return ap.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    lp, lm, tag = p3_lambda_limits(args.rho, args.alpha, args.beta)
    print(f"region {tag}; limits {complex(lp):.6g}, {complex(lm):.6g}")
    print(f"{'t':>10} {'perron':>14} {'dist to limits':>16}")
    for t in np.logspace(0, args.decades, args.decades + 1):
        _, mu = p3_replace(args.rho, args.alpha, args.beta, args.a, float(t), args.eta)
        z = mu.as_array()
        middle = sorted(z[1:], key=lambda v: abs(v - lp))[:1] + sorted(z[1:], key=lambda v: abs(v - lm))[:1]
        gap = max(abs(middle[0] - lp), abs(middle[1] - lm))
        print(f"{t:>10.3g} {z[0].real:>14.6g} {gap:>16.3e}")


if __name__ == "__main__":
    main()
