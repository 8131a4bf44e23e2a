"""List-level perturbations and replacements of realisable lists."""

from __future__ import annotations

import numpy as np

from ..errors import (DiagonalTooSmall, NoConjugatePair, PreconditionFailed,
                      SecondEntryNotReal, SpectrumMismatch)
from ..matching import bottleneck_match
from ..matrix import as_matrix, eigenvalues, min_entry
from ..poly import MonicPoly, roots_spectrum
from ..spectra import Spectrum, perron_of
from ._tol import PRE_TOL, leq


def _spectrum(sigma) -> Spectrum:
    return sigma if isinstance(sigma, Spectrum) else Spectrum(sigma)


def guo_perturb(sigma, delta: float, sign: int = 1, index: int = 1,
                tol: float = PRE_TOL) -> Spectrum:
    """``(rho + delta, lambda + sign*delta, ...)`` for a real entry ``lambda`` at ``index``.

    ``index`` defaults to the second entry; any other real, non-Perron entry
    may be chosen, which is how repeated applications round off a list.
    """
    sigma = _spectrum(sigma)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if delta < 0:
        raise PreconditionFailed(f"delta={delta:.6g} is negative", "delta-nonneg")
    if index == sigma.perron_index or not 0 <= index < len(sigma):
        raise PreconditionFailed(f"index {index} does not name a non-Perron entry", "index")
    lam = sigma[index]
    if abs(lam.imag) > tol * max(1.0, abs(lam)):
        raise SecondEntryNotReal(f"entry {index + 1} = {lam} is not real")
    out = list(sigma.entries)
    out[sigma.perron_index] = sigma.perron + delta
    out[index] = complex(lam.real + sign * delta, 0.0)
    return Spectrum(out, sigma.perron_index)


def guo_guo_perturb(sigma, delta: float, mode: str = "decrease",
                    tol: float = PRE_TOL) -> Spectrum:
    """Shift a conjugate pair (entries 2, 3) left or right while growing the Perron root.

    ``decrease``: ``(rho + 2 delta, alpha - delta +- i beta, ...)``;
    ``increase``: ``(rho + 4 delta, alpha + delta +- i beta, ...)``.
    """
    sigma = _spectrum(sigma)
    if delta < 0:
        raise PreconditionFailed(f"delta={delta:.6g} is negative", "delta-nonneg")
    if len(sigma) < 3:
        raise NoConjugatePair("need at least three entries")
    z1, z2 = sigma[1], sigma[2]
    if abs(z1 - z2.conjugate()) > tol * max(1.0, abs(z1)):
        raise NoConjugatePair(f"entries 2, 3 ({z1}, {z2}) are not conjugate")
    if mode == "decrease":
        grow, move = 2 * delta, -delta
    elif mode == "increase":
        grow, move = 4 * delta, delta
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out = list(sigma.entries)
    out[0] = sigma[0] + grow
    out[1] = z1 + move
    out[2] = z2 + move
    return Spectrum(out)


def cubic_replace(rho: float, lambda2: float, a: float, t1: float, t2: float,
                  tol: float = PRE_TOL) -> tuple[MonicPoly, Spectrum]:
    """Replace ``(rho, lambda2)`` by the three roots of
    ``(x - rho)(x - lambda2)(x - a) - (t1 + t2) x + t1 lambda2 + t2 rho``.
    """
    if a < 0 or t1 < 0:
        raise PreconditionFailed("a and t1 must be nonnegative", "nonneg")
    if not leq(abs(t2), t1, tol):
        raise PreconditionFailed(f"|t2| = {abs(t2):.6g} exceeds t1 = {t1:.6g}", "t2-bound")
    if not leq(abs(lambda2), rho, tol):
        raise PreconditionFailed("rho must be the Perron entry (rho >= |lambda2|)", "perron")
    c = np.polymul(np.polymul([1.0, -rho], [1.0, -lambda2]), [1.0, -a])
    c = c + np.array([0.0, 0.0, -(t1 + t2), t1 * lambda2 + t2 * rho])
    w = MonicPoly.from_coeffs(c)
    return w, roots_spectrum(w)


def diag_merge(mu, Bmu, sigma0, tol: float = 1e-8) -> Spectrum:
    """Replace the Perron root of ``sigma0`` by ``mu``, given a nonnegative ``Bmu`` realising ``mu``
    with a diagonal entry at least that Perron root.  List level only.
    """
    mu = _spectrum(mu)
    sigma0 = _spectrum(sigma0)
    B = as_matrix(Bmu)
    if min_entry(B) < -1e-10:
        raise PreconditionFailed("realising matrix is not nonnegative", "nonnegative")
    if B.shape[0] != len(mu):
        raise SpectrumMismatch(f"matrix order {B.shape[0]} differs from |mu| = {len(mu)}")
    resid, _ = bottleneck_match(eigenvalues(B), mu.as_array())
    if resid > tol * max(1.0, float(np.max(np.abs(mu.as_array())))):
        raise SpectrumMismatch(f"matrix spectrum differs from mu by {resid:.3g}")
    rho = perron_of(sigma0)
    dmax = float(np.max(np.diag(B)))
    if not leq(rho, dmax, PRE_TOL):
        raise DiagonalTooSmall(f"largest diagonal entry {dmax:.6g} is below rho = {rho:.6g}")
    tail = [z for i, z in enumerate(sigma0) if i != sigma0.perron_index]
    return Spectrum(list(mu.entries) + tail, mu.perron_index)
