"""Random generators of valid inputs and small shared utilities for the tests."""

import math

import numpy as np
from hypothesis import strategies as st

from niep.construct import remove_values
from niep.verify import match_spectra


def conj_closed(rng, n_pairs, n_real, radius=10.0):
    """Conjugate-closed list inside the disc of the given radius."""
    out = []
    for _ in range(n_pairs):
        r = radius * math.sqrt(rng.uniform()) * 0.999
        th = rng.uniform(0, math.pi)
        z = r * complex(math.cos(th), math.sin(th))
        out += [z, z.conjugate()]
    out += list(rng.uniform(-radius, radius, n_real))
    return [complex(z) for z in out]


@st.composite
def conj_closed_lists(draw, max_size=10, radius=10.0):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    n_pairs = draw(st.integers(0, max_size // 2))
    n_real = draw(st.integers(0 if n_pairs else 1, max_size - 2 * n_pairs))
    return conj_closed(rng, n_pairs, n_real, radius)


def ls_valid_draw(rng):
    """``(sigma, b1)`` satisfying every precondition of ``ls_realize``, or None."""
    n_pairs = int(rng.integers(0, 4))
    n_real = int(rng.integers(0 if n_pairs else 1, 4))
    rest = conj_closed(rng, n_pairs, n_real, radius=rng.uniform(0.5, 8))
    rho = max(abs(z) for z in rest) * rng.uniform(1.0, 3.0) + rng.uniform(0, 1)
    sigma = [complex(rho)] + rest
    n = len(sigma)
    s1 = sum(sigma).real
    gap = (n * sum(z * z for z in sigma) - s1**2).real
    if gap < 0:
        return None
    hi = min(s1, math.sqrt(gap / (n - 1)), s1 - n * max(z.real for z in rest))
    if hi < 0:
        return None
    return sigma, float(rng.uniform(0, hi)) if rng.uniform() < 0.7 else 0.0


def p2_companion_draw(rng):
    """Parameters for ``p2_companion_replace`` with a nonnegative realising ``B``."""
    rho = rng.uniform(0.5, 10)
    lam2 = rng.uniform(-rho, rho * 0.98)
    b1 = rng.uniform(0, rho + lam2)
    tail = list(rng.uniform(0, 20, int(rng.integers(0, 4))))
    if rng.uniform() < 0.5:
        c = (rho + lam2) / 2
        B = np.array([[c, rho - c], [rho - c, c]])
    else:
        # cI + J-type 3x3 block with spectrum (rho, lam2, lam2)
        c = lam2
        B = c * np.eye(3) + (rho - lam2) / 3 * np.ones((3, 3))
        if c < 0:
            return None
    return rho, lam2, b1, tail, B


def p2_mu_draw(rng):
    """``(rho, lam2, n, delta, mu)`` satisfying the preconditions of ``p2_mu_replace``."""
    rho = rng.uniform(0.5, 10)
    lam2 = rng.uniform(-rho, rho * 0.95)
    n = int(rng.integers(3, 8))
    lo, hi = (n - 2) * max(0.0, lam2), 0.5 * (n - 2) * (rho + lam2)
    if hi < lo:
        return None
    delta = rng.uniform(lo, hi)
    d = delta / (n - 2)
    n_pairs = int(rng.integers(0, (n - 1) // 2 + 1))
    y = []
    for _ in range(n_pairs):
        w = complex(rng.uniform(0, 1), rng.uniform(-1, 1))
        y += [w, w.conjugate()]
    y += list(rng.uniform(0, 1, n - 1 - len(y)))
    y = np.array(y, dtype=complex)
    A0 = rho + lam2 - d
    Y = float(np.sum(y).real)
    S2 = float(np.sum(y * y).real)
    target = rho**2 + lam2**2 + delta**2 / (n - 2)
    qa, qb, qc = Y**2 + S2, 2 * A0 * Y - 2 * d * Y, A0**2 + (n - 1) * d**2 - target
    disc = qb * qb - 4 * qa * qc
    if qa <= 0 or disc < 0:
        return None
    kappa = (-qb + math.sqrt(disc)) / (2 * qa)
    if kappa < 0:
        return None
    rest = d - kappa * y
    mu1 = A0 + kappa * Y
    if mu1 < 0 or mu1 < max(abs(rest)):
        return None
    return rho, lam2, n, delta, [complex(mu1)] + [complex(z) for z in rest]


def cyclic_draw(rng):
    """``(B, alpha, beta, a, t)`` with ``B = c I + s P`` for a cyclic permutation ``P``."""
    m = int(rng.integers(3, 8))
    c, s = rng.uniform(0, 2), rng.uniform(0.5, 3)
    P = np.roll(np.eye(m), 1, axis=1)
    k = int(rng.integers(1, (m - 1) // 2 + 1))
    w = np.exp(2j * np.pi * k / m)
    alpha, beta = c + s * w.real, s * w.imag
    return c * np.eye(m) + s * P, alpha, beta, rng.uniform(0, 2), rng.uniform(0, 30)


def tail_after(values, removed):
    return list(remove_values(values, removed))


def residual(a, b):
    return match_spectra(list(a), list(b))
