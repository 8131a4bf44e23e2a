"""Monic real polynomials written as ``x^n - b1 x^(n-1) - ... - bn``.

With this sign convention a companion matrix is nonnegative exactly when
every ``b_i`` is nonnegative.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .errors import NoConvergence, NotClosed
from .spectra import Spectrum

_EPS = np.finfo(float).eps
_CLUSTER = 1e-3
_POLISH = 3
_CERTIFY = 1e-12
_DPS = 40


@dataclass(frozen=True)
class MonicPoly:
    b: tuple[float, ...]

    def __init__(self, b: Sequence[float]):
        vals = tuple(float(x) for x in b)
        if not vals:
            raise ValueError("degree must be at least 1")
        object.__setattr__(self, "b", vals)

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def coeffs(self) -> np.ndarray:
        """Descending ordinary coefficients ``[1, -b1, ..., -bn]``."""
        return np.concatenate([[1.0], -np.asarray(self.b)])

    @classmethod
    def from_coeffs(cls, coeffs) -> "MonicPoly":
        c = np.asarray(coeffs, dtype=float)
        if c[0] == 0:
            raise ValueError("leading coefficient is zero")
        c = c / c[0]
        return cls(-c[1:])

    def __call__(self, x):
        return evaluate(self, x)

    def to_json(self) -> dict:
        return {"n": self.n, "b": list(self.b)}

    @classmethod
    def from_json(cls, data) -> "MonicPoly":
        if isinstance(data, str):
            data = json.loads(data)
        b = data["b"]
        if "n" in data and data["n"] != len(b):
            raise ValueError(f"n={data['n']} disagrees with {len(b)} coefficients")
        return cls(b)

    def __str__(self) -> str:
        terms = [f"x^{self.n}"]
        for i, bi in enumerate(self.b, start=1):
            if bi == 0:
                continue
            power = self.n - i
            mono = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            mag = f"{abs(bi):.6g}"
            if mono and mag == "1":
                mag = ""
            terms.append(("- " if bi > 0 else "+ ") + mag + mono)
        return " ".join(terms)


def evaluate(p: MonicPoly, x):
    """Horner evaluation; works elementwise on arrays."""
    acc = np.ones_like(np.asarray(x, dtype=complex))
    for bi in p.b:
        acc = acc * x - bi
    return acc if np.ndim(acc) else complex(acc)


def from_roots(roots, tol: float = 1e-9) -> MonicPoly:
    """Expand ``prod(x - r)`` for a conjugate-closed multiset of roots.

    Roots are paired with their conjugates and the real linear and quadratic
    factors are multiplied in exact rational arithmetic, so each coefficient
    carries a single rounding.
    """
    vals = np.asarray(list(roots), dtype=complex)
    c = np.array([1.0 + 0j])
    for r in vals:
        c = np.concatenate([c, [0.0]]) - r * np.concatenate([[0.0], c])
    scale = np.cumprod(np.concatenate([[1.0], np.sort(np.abs(vals))[::-1]]))
    if np.any(np.abs(c.imag) > tol * np.maximum(1.0, scale)):
        raise NotClosed("roots are not closed under conjugation")
    exact = [Fraction(1)]
    for i, j in _conjugate_pairs(vals):
        if i == j:
            factor = [Fraction(1), -Fraction(vals[i].real)]
        else:
            a = (Fraction(vals[i].real) + Fraction(vals[j].real)) / 2
            b = (abs(Fraction(vals[i].imag)) + abs(Fraction(vals[j].imag))) / 2
            factor = [Fraction(1), -2 * a, a * a + b * b]
        out = [Fraction(0)] * (len(exact) + len(factor) - 1)
        for k, x in enumerate(exact):
            for m, y in enumerate(factor):
                out[k + m] += x * y
        exact = out
    return MonicPoly([-float(x) for x in exact[1:]])


def coeffs_from_power_sums(s: Sequence[float]) -> MonicPoly:
    """Newton's identities: ``s_k = sum_{j<k} b_j s_{k-j} + k b_k``."""
    s = [float(x) for x in s]
    b: list[float] = []
    for k in range(1, len(s) + 1):
        acc = s[k - 1] - sum(b[j - 1] * s[k - j - 1] for j in range(1, k))
        b.append(acc / k)
    return MonicPoly(b)


def _abs_poly(p: MonicPoly, r):
    """Evaluate ``|x|^n + sum |b_i| |x|^(n-i)``, the rounding-error scale of Horner."""
    acc = np.ones_like(np.asarray(r, dtype=float))
    for bi in p.b:
        acc = acc * r + abs(bi)
    return acc


def backward_error(p: MonicPoly, z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    return np.abs(evaluate(p, z)) / _abs_poly(p, np.abs(z))


def _conjugate_pairs(z: np.ndarray) -> list[tuple[int, int]]:
    """Greedy pairing by ``|z_i - conj(z_j)|``; ``(i, i)`` marks a real root.

    Roots with ``|Im| < 1e-9 (1 + |z|)`` are real outright.
    """
    real = np.abs(z.imag) < 1e-9 * (1.0 + np.abs(z))
    pairs = [(i, i) for i in range(z.size) if real[i]]
    left = [i for i in range(z.size) if not real[i]]
    cand = sorted((abs(z[i] - z[j].conjugate()), i, j)
                  for a, i in enumerate(left) for j in left[a:])
    done: set[int] = set()
    for _, i, j in cand:
        if i in done or j in done:
            continue
        done.update((i, j))
        pairs.append((i, j))
    return pairs


def _symmetrize(z: np.ndarray) -> np.ndarray:
    """Make the root set conjugate-closed: self-paired roots become real, pairs are averaged."""
    z = z.copy()
    for i, j in _conjugate_pairs(z):
        if i == j:
            z[i] = z[i].real
        else:
            avg = 0.5 * (z[i] + z[j].conjugate())
            z[i], z[j] = avg, avg.conjugate()
    return z


def _merge_clusters(p: MonicPoly, z: np.ndarray, noise: float) -> np.ndarray:
    """Collapse tight clusters that approximate one multiple root.

    Near a root ``c`` of multiplicity ``k`` the iterates stall anywhere in the
    disc where ``|p|`` is at rounding level, of radius
    ``r = (k! noise |p|(|c|) / |p^(k)(c)|)^(1/k)``.  A cluster lying inside
    ``2r`` of its centroid (polished by Newton on ``p^(k-1)``) is replaced by
    that centroid, which is accurate to roughly ``noise`` rather than ``r``.
    """
    n = z.size
    scale = np.maximum(1.0, np.abs(z))
    labels = list(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= _CLUSTER * min(scale[i], scale[j]):
                old, new = labels[j], labels[i]
                labels = [new if lab == old else lab for lab in labels]
    z = z.copy()
    for lab in set(labels):
        idx = [i for i in range(n) if labels[i] == lab]
        k = len(idx)
        if k < 2:
            continue
        c = complex(np.mean(z[idx]))
        d = np.polyder(p.coeffs, k - 1)
        dd = np.polyder(d)
        for _ in range(5):
            den = np.polyval(dd, c)
            if den == 0:
                break
            c -= np.polyval(d, c) / den
        dk = abs(np.polyval(np.polyder(p.coeffs, k), c))
        if dk == 0:
            continue
        r = (math.factorial(k) * noise * float(_abs_poly(p, abs(c))) / dk) ** (1.0 / k)
        if np.max(np.abs(z[idx] - c)) <= 2 * r:
            z[idx] = c
    return z


def _aberth_step(p: MonicPoly, dp: MonicPoly, z: np.ndarray):
    """Aberth corrections ``w`` (apply as ``z - w``) and backward errors at ``z``."""
    n = z.size
    pz = evaluate(p, z)
    err = np.abs(pz) / _abs_poly(p, np.abs(z))
    dpz = n * evaluate(dp, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = pz / dpz
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        w = ratio / (1.0 - ratio * inv.sum(axis=1))
    bad = ~np.isfinite(w)
    # perturb roots stuck at a critical point
    w[bad] = -1e-3 * (1.0 + np.abs(z[bad])) * np.exp(1j * 0.7)
    w[err == 0] = 0.0
    return w, err


def _initial_guesses(p: MonicPoly) -> np.ndarray:
    """Companion eigenvalues from LAPACK, spread apart where they coincide.

    Falls back to a circle enclosing all roots if LAPACK returns non-finite values.
    """
    n = p.n
    G = np.zeros((n, n))
    G[np.arange(n - 1), np.arange(1, n)] = 1.0
    G[-1, :] = p.b[::-1]
    z = np.linalg.eigvals(G).astype(complex)
    if not np.all(np.isfinite(z)):
        radius = 1.0 + max(abs(x) for x in p.b)
        return radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    # Aberth needs pairwise distinct starting points
    spread = 1e-6 * np.maximum(1.0, np.abs(z))
    for i in range(n):
        while np.any(np.abs(z[:i] - z[i]) < spread[i]):
            z[i] += spread[i] * np.exp(1j * (0.4 + i))
    return z


def roots(p: MonicPoly, tol: float = 1e-12, max_iter: int = 200) -> np.ndarray:
    """All complex roots by Aberth-Ehrlich simultaneous iteration from companion eigenvalues.

    A root is frozen once its Newton correction is below ``tol`` relative to
    its size, or once ``|p(z)|`` is down at the Horner rounding level.
    Conjugate pairs are symmetrised after convergence.
    """
    n = p.n
    zeros = 0
    while zeros < n and p.b[n - 1 - zeros] == 0:
        zeros += 1
    if zeros:
        head = roots(MonicPoly(p.b[: n - zeros]), tol, max_iter) if zeros < n else np.array([])
        return np.concatenate([head, np.zeros(zeros, dtype=complex)])
    if n == 1:
        return np.array([complex(p.b[0])])
    z = _initial_guesses(p)
    dp = MonicPoly.from_coeffs(np.polyder(p.coeffs) / n)  # p'/n as a monic poly
    active = np.ones(n, dtype=bool)
    noise = 4 * n * _EPS
    for _ in range(max_iter):
        w, err = _aberth_step(p, dp, z)
        active &= err > noise
        if not active.any():
            break
        w[~active] = 0.0
        z = z - w
        # a short step alone can be stagnation inside a cluster; also require a small residual
        small = (np.abs(w) <= tol * np.maximum(1.0, np.abs(z))) & (err <= 4 * noise)
        active &= ~small
    else:
        if active.any():
            raise NoConvergence(f"Aberth iteration did not converge in {max_iter} sweeps")
    # the freeze test uses a rounding bound; a few more sweeps reach the actual rounding level
    for _ in range(_POLISH):
        w, err = _aberth_step(p, dp, z)
        trial = z - w
        better = np.isfinite(trial) & (backward_error(p, trial) <= err)
        z = np.where(better, trial, z)
    z = _symmetrize(_merge_clusters(p, z, noise))
    if np.max(backward_error(p, z)) >= max(tol, 1e3 * noise):
        raise NoConvergence("converged roots fail the backward-error check")
    return z


def roots_spectrum(p: MonicPoly, tol: float = 1e-12, max_iter: int = 200) -> Spectrum:
    """Roots ordered Perron first, then by descending real part and ascending imaginary part.

    Float coefficients are exact binary rationals, so the certified path applies.
    """
    if not all(math.isfinite(b) for b in p.b):
        return sort_perron_first(roots(p, tol, max_iter))
    exact = [Fraction(1)] + [-Fraction(b) for b in p.b]
    return sort_perron_first(roots_exact(exact, tol))


def sort_perron_first(values, tol: float = 1e-9) -> Spectrum:
    vals = list(np.asarray(list(values), dtype=complex))
    rho = max(abs(v) for v in vals)
    slack = tol * max(1.0, rho)
    perron = [i for i, v in enumerate(vals)
              if abs(v.imag) <= slack and v.real >= -slack and abs(v.real - rho) <= slack]
    if perron:
        k = perron[0]
    else:
        k = max(range(len(vals)), key=lambda i: (vals[i].real, -vals[i].imag))
    head = vals.pop(k)
    rest = sorted(vals, key=lambda v: (-v.real, v.imag))
    return Spectrum([head] + rest)


def shifted_companion(p: MonicPoly, gamma: float = 0.0) -> np.ndarray:
    """Companion matrix (ones on the superdiagonal, bottom row ``b_n .. b_1``) plus ``gamma * I``."""
    n = p.n
    G = np.zeros((n, n))
    G[np.arange(n - 1), np.arange(1, n)] = 1.0
    G[-1, :] = p.b[::-1]
    return G + gamma * np.eye(n)


def taylor_shift(coeffs: Sequence, c) -> list:
    """Descending coefficients of ``p(x + c)``; exact when given Fractions."""
    out = list(coeffs)
    n = len(out) - 1
    for i in range(n):
        for j in range(1, n - i + 1):
            out[j] += c * out[j - 1]
    return out


def _mp_coeffs(coeffs: Sequence[Fraction]) -> list:
    return [mpmath.mpf(c.numerator) / c.denominator for c in coeffs]


def _inclusion_radii(mcoeffs: list, z: np.ndarray) -> np.ndarray:
    """``n |p(z) / p'(z)|``: each disc of that radius about ``z`` holds a root."""
    n = len(mcoeffs) - 1
    out = np.empty(z.size)
    for i, x in enumerate(z):
        val, der = mpmath.polyval(mcoeffs, mpmath.mpc(x), derivative=True)
        out[i] = 0.0 if val == 0 else (math.inf if der == 0 else float(n * abs(val / der)))
    return out


def _float_radii(fcoeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Upper bounds on the Newton inclusion radii from double-precision Horner.

    The a-priori Horner error bound (coefficient rounding included) is added
    to ``|p|`` and taken off ``|p'|``, so a small result is trustworthy.
    """
    n = fcoeffs.size - 1
    u = np.finfo(float).eps / 2
    val = np.zeros_like(z)
    der = np.zeros_like(z)
    for c in fcoeffs:
        der = der * z + val
        val = val * z + c
    az = np.abs(z)
    absval = np.polyval(np.abs(fcoeffs), az)
    absder = np.polyval(np.abs(np.polyder(fcoeffs)), az) if n > 1 else np.ones_like(az)
    gamma = (8 * n + 4) * u
    num = np.abs(val) + gamma * absval
    den = np.abs(der) - gamma * n * absder
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(den > 0, n * num / den, math.inf)


def roots_exact(coeffs: Sequence, tol: float = 1e-12, dps: int = _DPS) -> np.ndarray:
    """Roots of a monic polynomial with exact rational descending coefficients ``[1, c1, ..., cn]``.

    The polynomial is recentred at the mean of its roots before rounding to
    floats and solved by :func:`roots`.  Each root is then checked with a
    Newton inclusion disc, first from a bounded double-precision evaluation
    and then against the exact coefficients; if any disc is wider than
    ``_CERTIFY`` (relative) the roots are recomputed in multiprecision.
    """
    coeffs = [Fraction(c) for c in coeffs]
    if coeffs[0] != 1:
        raise ValueError("leading coefficient must be 1")
    n = len(coeffs) - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    center = Fraction(-coeffs[1] / n)
    shifted = taylor_shift(coeffs, center)
    z = roots(MonicPoly([-float(c) for c in shifted[1:]]), tol)
    bound = _CERTIFY * np.maximum(1.0, np.abs(z))
    if np.all(_float_radii(np.array([float(c) for c in shifted]), z) <= bound):
        return _symmetrize(z + float(center))
    with mpmath.workdps(dps):
        mshift = _mp_coeffs(shifted)
        if np.all(_inclusion_radii(mshift, z) <= bound):
            return _symmetrize(z + float(center))
        try:
            w = mpmath.polyroots(mshift, maxsteps=50 * n + 100, extraprec=4 * dps)
        except mpmath.libmp.NoConvergence:
            return _symmetrize(z + float(center))
        mc = mpmath.mpf(center.numerator) / center.denominator
        return _symmetrize(np.array([complex(x + mc) for x in w]))
