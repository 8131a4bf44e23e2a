"""Bordering a small matrix ``M`` onto a Perron-normalised realising matrix ``B``.

With ``Y1`` the ``m x p`` block of eigenvector columns of ``B`` (``e`` first)
and ``M = [[A, K], [L, C]]`` where ``B Y1 = Y1 C``, the matrix

    N = [[A, H], [Y1 L, B]],   K = H Y1,

has spectrum ``sigma(M)`` together with ``sigma(B)`` minus ``sigma(C)``.  It
is nonnegative when ``A >= 0``, ``Y1 L >= 0`` and ``H >= 0``; this module
checks those cone conditions and builds ``H`` explicitly.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConeViolation, HRecoveryFailed, HypothesisViolated, PreconditionFailed
from ..matrix import EigStructure, as_matrix
from ._tol import PRE_TOL, close, leq
from .p2 import p2_b2, p2_gamma


def _assemble(A, H, Y1L, B) -> np.ndarray:
    n1, m = A.shape[0], B.shape[0]
    N = np.zeros((n1 + m, n1 + m))
    N[:n1, :n1] = A
    N[:n1, n1:] = H
    N[n1:, :n1] = Y1L
    N[n1:, n1:] = B
    return N


def _check_A(A, tol):
    if A.size and A.min() < -tol:
        i, j = np.unravel_index(np.argmin(A), A.shape)
        raise ConeViolation(f"A[{i},{j}] = {A[i, j]:.6g} is negative", "A")


def _glue_p1(es: EigStructure, M: np.ndarray, tol: float) -> np.ndarray:
    n1 = M.shape[0] - 1
    if not close(M[n1, n1], es.rho, tol):
        raise HypothesisViolated(f"corner entry {M[n1, n1]:.6g} is not rho = {es.rho:.6g}", "C")
    A, k, l = M[:n1, :n1], M[:n1, n1], M[n1, :n1]
    _check_A(A, tol)
    for name, vec in (("K", k), ("L", l)):
        if vec.size and vec.min() < -tol:
            raise ConeViolation(f"{name} entry {int(np.argmin(vec))} is negative", name)
    H = np.zeros((n1, es.m))
    H[:, 0] = k
    return _assemble(A, H, np.outer(np.ones(es.m), l), es.B)


def cone_L_p2(l1: float, l2: float, z_max: float, z_min: float, tol: float = PRE_TOL) -> bool:
    """Membership of ``(l1, l2)`` in ``{l : Y1 l >= 0}`` for ``Y1 = [e z]``."""
    if z_min < 0:
        return leq(-l1 / z_max, l2, tol) and leq(l2, -l1 / z_min, tol)
    return leq(0.0, l1, tol) and leq(-l1 / z_max, l2, tol)


def cone_K_p2(k1: float, k2: float, z_max: float, z_min: float, tol: float = PRE_TOL) -> bool:
    """Membership of ``(k1, k2)`` in ``{h^T Y1 : h >= 0}`` for ``Y1 = [e z]``."""
    return leq(z_min * k1, k2, tol) and leq(k2, z_max * k1, tol)


def _glue_p2(es: EigStructure, M: np.ndarray, tol: float) -> np.ndarray:
    if es.z is None or es.lambda2 is None:
        raise PreconditionFailed("EigStructure has no real eigenvector z", "z")
    rho, lam2, z = es.rho, es.lambda2, es.z
    n1 = M.shape[0] - 2
    A, Kp, Lp, Cp = M[:n1, :n1], M[:n1, n1:], M[n1:, :n1], M[n1:, n1:]
    gamma = Cp[0, 0]
    b1 = Cp[1, 1] - gamma
    if not close(Cp[0, 1], 1.0, tol):
        raise HypothesisViolated("C' must have a unit (1,2) entry", "(ii)")
    if not close(gamma, p2_gamma(rho, lam2, b1), tol):
        raise HypothesisViolated(f"gamma = {gamma:.6g} does not equal (rho + lambda2 - b1)/2", "(ii)")
    if not close(Cp[1, 0], p2_b2(rho, lam2, b1), tol):
        raise HypothesisViolated(f"b2 = {Cp[1, 0]:.6g} does not equal ((rho-lambda2)^2 - b1^2)/4", "(ii)")
    if close(rho, lam2, tol):
        raise HypothesisViolated("rho must differ from lambda2", "(i)")
    _check_A(A, tol)

    # M = diag(I, X)^-1 M' diag(I, X) with X^-1 C' X = diag(rho, lambda2)
    X = np.array([[1.0, 1.0], [rho - gamma, lam2 - gamma]])
    Xinv = np.array([[gamma - lam2, 1.0], [rho - gamma, -1.0]]) / (rho - lam2)
    K = Kp @ X
    L = Xinv @ Lp

    z_max, z_min = float(z.max()), float(z.min())
    if z_max <= 0 or z_min > tol:
        raise PreconditionFailed("z must satisfy z_max > 0 >= z_min", "z")
    for j in range(n1):
        if not cone_L_p2(L[0, j], L[1, j], z_max, z_min, tol):
            raise ConeViolation(f"column {j} of L = ({L[0, j]:.6g}, {L[1, j]:.6g}) is outside L(Y1)", "L")
    i_max = int(np.argmax(z))
    i_min = int(np.argmin(z))
    H = np.zeros((n1, es.m))
    for i in range(n1):
        k1, k2 = K[i]
        if not cone_K_p2(k1, k2, z_max, z_min, tol):
            raise ConeViolation(f"row {i} of K = ({k1:.6g}, {k2:.6g}) is outside K(Y1)", "K")
        # k = h_max (1, z_max) + h_min (1, z_min)
        h_max = (k2 - z_min * k1) / (z_max - z_min)
        h_min = (z_max * k1 - k2) / (z_max - z_min)
        if min(h_max, h_min) < -tol * max(1.0, abs(k1), abs(k2)):
            raise HRecoveryFailed(f"row {i}: recovered weights ({h_max:.3g}, {h_min:.3g}) are negative")
        H[i, i_max] += max(h_max, 0.0)
        H[i, i_min] += max(h_min, 0.0)
    Y1L = np.outer(np.ones(es.m), L[0]) + np.outer(z, L[1])
    return _assemble(A, H, Y1L, es.B)


def p3_small_matrix(es: EigStructure, a: float, t: float) -> np.ndarray:
    """The ``4 x 4`` matrix ``[[a, t, t u1, t v1], [(1, u1, v1)^T, C]]``."""
    if es.u is None or es.v is None:
        raise PreconditionFailed("EigStructure has no complex eigenvector pair", "uv")
    u1, v1 = es.u[0], es.v[0]
    al, be = es.alpha, es.beta
    return np.array([
        [a, t, t * u1, t * v1],
        [1.0, es.rho, 0.0, 0.0],
        [u1, 0.0, al, be],
        [v1, 0.0, -be, al],
    ])


def _glue_p3(es: EigStructure, M: np.ndarray, tol: float) -> np.ndarray:
    if es.u is None or es.v is None:
        raise PreconditionFailed("EigStructure has no complex eigenvector pair", "uv")
    u, v = es.u, es.v
    n1 = M.shape[0] - 3
    C = np.array([[es.rho, 0, 0], [0, es.alpha, es.beta], [0, -es.beta, es.alpha]])
    if not np.allclose(M[n1:, n1:], C, atol=tol * max(1.0, es.rho)):
        raise HypothesisViolated("trailing 3x3 block is not C", "C")
    A, K, L = M[:n1, :n1], M[:n1, n1:], M[n1:, :n1]
    _check_A(A, tol)
    Y1 = np.column_stack([np.ones(es.m), u, v])
    Y1L = Y1 @ L
    if Y1L.size and Y1L.min() < -tol * max(1.0, np.abs(L).max()):
        i, j = np.unravel_index(np.argmin(Y1L), Y1L.shape)
        raise ConeViolation(f"column {j} of L is outside L(Y1) (row {i} of Y1 L is negative)", "L")
    H = np.zeros((n1, es.m))
    for i in range(n1):
        tau = K[i, 0]
        # only rows tau (1, u1, v1), tau >= 0, are supported: H = tau e_1^T
        if tau < -tol or not np.allclose(K[i], tau * Y1[0], atol=tol * max(1.0, abs(tau))):
            raise HRecoveryFailed(f"row {i} of K is not a nonnegative multiple of (1, u1, v1)")
        H[i, 0] = max(tau, 0.0)
    return _assemble(A, H, Y1L, es.B)


def glue(es: EigStructure, mprime=None, *, p: int, a: float = 0.0, t: float = 0.0,
         tol: float = PRE_TOL) -> np.ndarray:
    """Build the nonnegative matrix ``N`` from ``es`` and the small matrix.

    ``p = 1``: ``mprime = [[A, k], [l^T, rho]]``.
    ``p = 2``: ``mprime`` is ``M'`` ending in ``C' = [[gamma, 1], [b2, b1 + gamma]]``;
    ``es`` needs ``z`` and ``lambda2``.
    ``p = 3``: ``mprime`` defaults to :func:`p3_small_matrix` ``(es, a, t)``;
    ``es`` needs ``u``, ``v``, ``alpha``, ``beta``.
    """
    if p == 3 and mprime is None:
        if a < 0 or t < 0:
            raise PreconditionFailed("a and t must be nonnegative", "nonneg")
        mprime = p3_small_matrix(es, a, t)
    if mprime is None:
        raise PreconditionFailed(f"p={p} needs the small matrix", "mprime")
    M = as_matrix(mprime)
    if M.shape[0] < p:
        raise PreconditionFailed(f"small matrix of order {M.shape[0]} is smaller than p={p}", "shape")
    if p == 1:
        return _glue_p1(es, M, tol)
    if p == 2:
        return _glue_p2(es, M, tol)
    if p == 3:
        return _glue_p3(es, M, tol)
    raise ValueError(f"p must be 1, 2 or 3, got {p}")


def remove_values(values, removed, tol: float = 1e-6) -> np.ndarray:
    """Drop from ``values`` the nearest match of each entry of ``removed``."""
    vals = list(np.asarray(values, dtype=complex))
    for r in np.asarray(removed, dtype=complex).ravel():
        k = int(np.argmin([abs(v - r) for v in vals]))
        if abs(vals[k] - r) > tol * max(1.0, abs(r)):
            raise ValueError(f"{r} is not among the values")
        vals.pop(k)
    return np.array(vals, dtype=complex)
