"""Rebuild the worked matrices and lists, certify each, and print a one-line summary per case."""

import math

import numpy as np

from niep import certify
from niep.construct import (P2Params, find_s_for_imag, ls_realize, p2_assemble,
                            p2_companion_replace, p2_mu_replace, p3_replace, special_family_list)

PHI = (1 + math.sqrt(5)) / 2


def two_block_matrix():
    r = 1 / 29
    A = np.zeros((5, 5))
    A[0, 1] = A[1, 2] = A[2, 3] = A[3, 4] = 1
    A[2, :2] = [296 * r, 5 * r]
    params = P2Params.build(8, -2, 6, A=A, f=[0, 0, 0, 0, 1], g=np.zeros(5), c=np.zeros(5),
                            d=[17024 * r, 30016 * r, 15872 * r, 0, 0])
    return p2_assemble(params)


def report(name, M, target):
    cert = certify(M, target)
    print(f"{name:<28} n={cert.matrix_order:<2} min_entry={cert.min_entry:+.3g} "
          f"residual={cert.spectral_residual:.2e} passed={cert.passed}")


def main():
    # the doubly companion matrix is not meant to be nonnegative; only its spectrum is checked
    M = p2_assemble(P2Params.build(8, 2, 10, A=[[0, 1], [3, 0]], f=[0, 1], g=[0, 0],
                                   c=[42, 0], d=[336, 28]))
    report("doubly companion (4x4)", M, [9, 1, 2j, -2j])
    factors = np.polymul(np.polymul([29, -203, -266], [1, 0, 0, 0, 64]), [1, 1])
    report("two-block (7x7)", two_block_matrix(), np.roots(factors))

    # a bare companion block carries negative entries; nonnegativity belongs to the glued matrix
    res = p2_companion_replace(4, 2, 6, [10, 25])
    report("companion replacement", res.matrix, res.mu)

    golden = [PHI, 1 - PHI, 1j, -1j]
    report("prescribed list", p2_mu_replace(1, 0, 4, 0, golden).matrix, golden)
    report("companion realisation", ls_realize(golden, 1), golden)

    _, mu = p3_replace(26, -12, 2, 0, 550, 1)
    print(f"{'p=3 replacement, t=550':<28} roots={np.round(mu.as_array(), 5)}")

    s0 = find_s_for_imag(1.0)
    print(f"{'special family, b=1':<28} s0={s0:.10f} list={np.round(special_family_list(1.0).as_array(), 6)}")


if __name__ == "__main__":
    main()
