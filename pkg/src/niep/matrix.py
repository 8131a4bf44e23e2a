"""Small dense matrices: characteristic polynomials, eigen-data and Perron normalisation."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import (NoComplexPair, NoConvergence, NoRealEigvec, PositiveEigvec,
                     PreconditionFailed, ZeroPerronEntry)
from .poly import MonicPoly, roots_exact


def as_matrix(A) -> np.ndarray:
    M = np.asarray(A, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def matrix_to_json(A) -> dict:
    M = as_matrix(A)
    return {"n": M.shape[0], "rows": M.tolist()}


def matrix_from_json(data) -> np.ndarray:
    if isinstance(data, str):
        data = json.loads(data)
    rows = data["rows"] if isinstance(data, dict) else data
    M = as_matrix(rows)
    if isinstance(data, dict) and "n" in data and data["n"] != M.shape[0]:
        raise ValueError(f"n={data['n']} disagrees with {M.shape[0]} rows")
    return M


def matrix_to_csv(A) -> str:
    M = as_matrix(A)
    return "".join(",".join(repr(float(x)) for x in row) + "\n" for row in M)


def _exact_entries(A) -> list[list[Fraction]]:
    if isinstance(A, np.ndarray) and A.dtype != object:
        return [[Fraction(float(x)) for x in row] for row in A]
    return [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in A]


def char_poly_exact(A) -> list[Fraction]:
    """Exact characteristic polynomial ``[1, c_1, ..., c_n]`` of ``x^n + c_1 x^(n-1) + ... + c_n``.

    Faddeev-LeVerrier over Python integers: entries (floats, ints or
    Fractions) are converted exactly to rationals and scaled by a common
    denominator ``D``, so every division by ``k`` in the recursion is exact.
    """
    F = _exact_entries(A)
    n = len(F)
    if n == 0 or any(len(row) != n for row in F):
        raise ValueError("expected a nonempty square matrix")
    D = 1
    for row in F:
        for x in row:
            D = lcm(D, x.denominator)
    Z = np.array([[int(x * D) for x in row] for row in F], dtype=object)
    eye = np.eye(n, dtype=int).astype(object)
    M = eye
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        AM = Z.dot(M)
        c, rem = divmod(-sum(AM[i, i] for i in range(n)), k)
        assert rem == 0
        # coefficient of x^(n-k) for Z/D is c / D^k
        coeffs.append(Fraction(c, D**k))
        M = AM + c * eye
    return coeffs


def char_poly(A) -> MonicPoly:
    """Characteristic polynomial, exact until the final rounding of each coefficient."""
    return MonicPoly([-float(c) for c in char_poly_exact(A)[1:]])


def eigenvalues(A, tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues as roots of the exact characteristic polynomial.

    See :func:`niep.poly.roots_exact`; this keeps clustered eigenvalues of
    companion-type matrices accurate where rounding the unshifted
    coefficients would not.
    """
    return roots_exact(char_poly_exact(A), tol)


def min_entry(A) -> float:
    return float(np.min(as_matrix(A)))


def is_nonnegative(A, tol: float = 1e-10) -> bool:
    return min_entry(A) >= -tol


@dataclass(frozen=True)
class EigStructure:
    """Perron-normalised matrix ``B`` (``B e = rho e``) plus eigenvector data.

    ``z`` is a real eigenvector for a real eigenvalue ``lambda2`` scaled so
    ``max(z) == 1``.  ``u + i v`` is an eigenvector for ``alpha + i beta``
    with ``u_1^2 + v_1^2 == eta == max_i(u_i^2 + v_i^2)``.
    """

    B: np.ndarray
    rho: float
    lambda2: float | None = None
    z: np.ndarray | None = None
    alpha: float | None = None
    beta: float | None = None
    u: np.ndarray | None = None
    v: np.ndarray | None = None
    eta: float | None = None
    perm: np.ndarray | None = None

    @property
    def m(self) -> int:
        return self.B.shape[0]


def perron_pair(A, tol: float = 1e-12, max_iter: int = 10_000) -> tuple[float, np.ndarray]:
    """Perron root and unit-max eigenvector of a nonnegative matrix.

    Power iteration on ``A + I``: the shift makes the Perron root strictly
    dominant even for periodic matrices and leaves the eigenvector unchanged.
    """
    A = as_matrix(A)
    n = A.shape[0]
    S = A + np.eye(n)
    x = np.ones(n) / n
    scale = max(np.abs(A).sum(axis=1).max(), 1e-300)
    def step(x):
        y = S @ x
        x = y / y.max()
        rho = float((A @ x).sum() / x.sum())
        return x, rho, float(np.max(np.abs(A @ x - rho * x)))

    for _ in range(max_iter):
        x, rho, res = step(x)
        if res < tol * scale:
            break
    else:
        raise NoConvergence(f"power iteration did not converge in {max_iter} iterations")
    # keep going while the residual still improves
    for _ in range(200):
        x_new, rho_new, res_new = step(x)
        if res_new >= res:
            break
        x, rho, res = x_new, rho_new, res_new
    return rho, x


def normalize_perron(A, tol: float = 1e-10) -> EigStructure:
    """Diagonal similarity ``B = X^-1 A X`` with ``X = diag(x)`` so that ``B e = rho e``."""
    A = as_matrix(A)
    if min_entry(A) < -tol:
        raise PreconditionFailed("normalize_perron needs a nonnegative matrix", "nonnegative")
    rho, x = perron_pair(A)
    if x.min() <= tol:
        raise ZeroPerronEntry(f"Perron eigenvector has entry {x.min():.3g}; reducible case unsupported")
    B = A * x[None, :] / x[:, None]
    return EigStructure(B=B, rho=rho)


def _null_vectors(M: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis (as columns) of the numerical null space of ``M``."""
    _, s, vh = np.linalg.svd(M)
    scale = max(1.0, s[0])
    k = int(np.sum(s <= tol * scale))
    if k == 0:
        return np.zeros((M.shape[1], 0), dtype=M.dtype)
    return vh[-k:].conj().T


def real_eigvec(es: EigStructure, lambda2: float, tol: float = 1e-8) -> np.ndarray:
    """Real eigenvector for ``lambda2`` scaled so ``max(z) == 1`` and ``min(z) <= 0``."""
    if abs(lambda2 - es.rho) <= tol * max(1.0, abs(es.rho)):
        raise PreconditionFailed("lambda2 must differ from the Perron root", "lambda2-eq-rho")
    basis = _null_vectors(es.B - lambda2 * np.eye(es.m), tol)
    if basis.shape[1] == 0:
        raise NoRealEigvec(f"{lambda2:.6g} is not an eigenvalue of B")
    z = basis[:, 0].real
    # fix the sign: largest-magnitude entry (first on ties) positive
    k = int(np.argmax(np.abs(z) >= np.abs(z).max() * (1 - 1e-9)))
    if z[k] < 0:
        z = -z
    for cand in (z, -z):
        if cand.max() > 0:
            scaled = cand / cand.max()
            if scaled.min() <= tol:
                scaled[np.abs(scaled) <= tol * 1e-3] = 0.0
                return scaled
    raise PositiveEigvec("every scaling of the eigenvector is strictly positive")


def with_real_eigvec(es: EigStructure, lambda2: float, tol: float = 1e-8) -> EigStructure:
    return replace(es, lambda2=float(lambda2), z=real_eigvec(es, lambda2, tol))


def complex_eigvec_pair(es: EigStructure, alpha: float, beta: float,
                        tol: float = 1e-8, eta: float = 1.0) -> EigStructure:
    """Eigenvector ``u + i v`` for ``alpha + i beta`` with the largest row moved first.

    ``B`` is conjugated by the permutation swapping row 1 with the row where
    ``u_i^2 + v_i^2`` is maximal, and ``(u, v)`` is rescaled so that this
    maximum equals ``eta``.
    """
    if beta <= 0:
        raise PreconditionFailed("beta must be positive", "beta")
    if not 0 < eta <= 1:
        raise PreconditionFailed("eta must lie in (0, 1]", "eta")
    lam = complex(alpha, beta)
    basis = _null_vectors(es.B.astype(complex) - lam * np.eye(es.m), tol)
    if basis.shape[1] == 0:
        raise NoComplexPair(f"{alpha:.6g}+{beta:.6g}i is not an eigenvalue of B")
    w = basis[:, 0]
    mag = np.abs(w) ** 2
    k = int(np.argmax(mag))
    perm = np.arange(es.m)
    perm[[0, k]] = perm[[k, 0]]
    B = es.B[np.ix_(perm, perm)]
    w = w[perm]
    w = w * np.sqrt(eta / mag[k])
    u, v = w.real.copy(), w.imag.copy()
    # u1^2 + v1^2 equals eta up to rounding; report the requested value so eta <= 1 stays exact
    return replace(es, B=B, alpha=float(alpha), beta=float(beta), u=u, v=v,
                   eta=float(eta), perm=perm)
