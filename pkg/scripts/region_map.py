"""Print an ASCII map of the sign-pattern regions over an (alpha, beta) grid for a fixed rho."""

import argparse

import numpy as np

from niep.construct import Region, classify_region

GLYPH = {
    Region.COMPLEX_PAIR: "c",
    Region.REAL_MIXED_SIGN: "m",
    Region.REAL_BOTH_NONNEG: "+",
    Region.REAL_BOTH_NONPOS: "-",
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rho", type=float, default=1.0)
    ap.add_argument("--cols", type=int, default=61)
    ap.add_argument("--rows", type=int, default=20)
    args = ap.parse_args(argv)

    alphas = np.linspace(-args.rho, args.rho, args.cols)
    betas = np.linspace(args.rho, args.rho / args.rows, args.rows)
    for beta in betas:
        row = ""
        for alpha in alphas:
            # only points inside the Perron disc are meaningful
            if np.hypot(alpha, beta) > args.rho:
                row += " "
            else:
                row += GLYPH[classify_region(args.rho, alpha, beta).region]
        print(f"{beta:6.3f} |{row}")
    print(f"{'':6}  alpha from {-args.rho:g} to {args.rho:g}")
    print("legend: " + ", ".join(f"{g} = {r.value}" for r, g in GLYPH.items()))


if __name__ == "__main__":
    main()
