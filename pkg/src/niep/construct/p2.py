"""Replacing the Perron root and one real eigenvalue (two-dimensional coupling block)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import HypothesisViolated, PreconditionFailed
from ..matrix import char_poly, is_nonnegative
from ..poly import MonicPoly, roots_spectrum, shifted_companion
from ..spectra import Spectrum, is_conjugate_closed, perron_first, power_sum
from ._tol import PRE_TOL, close, leq
from .realize import ls_companion


def p2_gamma(rho: float, lambda2: float, b1: float) -> float:
    return (rho + lambda2 - b1) / 2


def p2_b2(rho: float, lambda2: float, b1: float) -> float:
    return ((rho - lambda2) ** 2 - b1**2) / 4


@dataclass(frozen=True)
class P2Params:
    """Blocks of ``M' = [[A, [f g]], [[c^T; d^T], C']]`` with ``C' = [[gamma, 1], [b2, b1 + gamma]]``."""

    rho: float
    lambda2: float
    b1: float
    A: np.ndarray
    f: np.ndarray
    g: np.ndarray
    c: np.ndarray
    d: np.ndarray

    @property
    def gamma(self) -> float:
        return p2_gamma(self.rho, self.lambda2, self.b1)

    @property
    def b2(self) -> float:
        return p2_b2(self.rho, self.lambda2, self.b1)

    @property
    def n(self) -> int:
        return self.A.shape[0] + 2

    @classmethod
    def build(cls, rho, lambda2, b1, A=None, f=(), g=(), c=(), d=()) -> "P2Params":
        f, g, c, d = (np.asarray(x, dtype=float).ravel() for x in (f, g, c, d))
        k = max(len(f), len(g), len(c), len(d))
        A = np.zeros((k, k)) if A is None else np.asarray(A, dtype=float).reshape(k, k)
        vecs = [x if x.size else np.zeros(k) for x in (f, g, c, d)]
        return cls(float(rho), float(lambda2), float(b1), A, *vecs)

    def check(self, tol: float = PRE_TOL) -> None:
        """Raise HypothesisViolated naming the first failing hypothesis and its witness."""
        k = self.A.shape[0]
        if self.A.shape != (k, k) or any(x.shape != (k,) for x in (self.f, self.g, self.c, self.d)):
            raise HypothesisViolated("block shapes are inconsistent", "shape")
        if close(self.rho, self.lambda2, tol):
            raise HypothesisViolated("rho must differ from lambda2", "(i)")
        if not leq(0.0, self.gamma, tol):
            raise HypothesisViolated(f"gamma = {self.gamma:.6g} < 0", "(ii)")
        for i in range(k):
            if not leq(0.0, self.g[i], tol):
                raise HypothesisViolated(f"g[{i}] = {self.g[i]:.6g} < 0", "(iii)")
            bound = (self.gamma - self.lambda2) * self.g[i]
            if not leq(bound, self.f[i], tol):
                raise HypothesisViolated(f"f[{i}] = {self.f[i]:.6g} < (gamma - lambda2) g[{i}]", "(iii)")
            if not leq(0.0, self.c[i], tol):
                raise HypothesisViolated(f"c[{i}] = {self.c[i]:.6g} < 0", "(iv)")
            bound = (self.rho - self.gamma) * self.c[i]
            if not leq(bound, self.d[i], tol):
                raise HypothesisViolated(f"d[{i}] = {self.d[i]:.6g} < (rho - gamma) c[{i}]", "(iv)")
        if k and not is_nonnegative(self.A, tol):
            i, j = np.unravel_index(np.argmin(self.A), self.A.shape)
            raise HypothesisViolated(f"A[{i},{j}] = {self.A[i, j]:.6g} < 0", "(v)")

    def mprime(self) -> np.ndarray:
        k = self.A.shape[0]
        M = np.zeros((k + 2, k + 2))
        M[:k, :k] = self.A
        M[:k, k] = self.f
        M[:k, k + 1] = self.g
        M[k, :k] = self.c
        M[k + 1, :k] = self.d
        M[k:, k:] = [[self.gamma, 1.0], [self.b2, self.b1 + self.gamma]]
        return M


@dataclass(frozen=True)
class P2Result:
    w: MonicPoly
    matrix: np.ndarray
    mu: Spectrum
    params: P2Params


def p2_assemble(params: P2Params, tol: float = PRE_TOL) -> np.ndarray:
    params.check(tol)
    return params.mprime()


def _companion_params(rho, lambda2, b1, tail) -> P2Params:
    """Blocks that make ``M'`` a companion matrix plus ``gamma * I``."""
    k = len(tail)
    gamma = p2_gamma(rho, lambda2, b1)
    A = gamma * np.eye(k) + np.eye(k, k, 1)
    f = np.zeros(k)
    if k:
        f[-1] = 1.0
    d = np.asarray(tail, dtype=float)[::-1]  # (b_n, ..., b_3)
    return P2Params.build(rho, lambda2, b1, A, f, np.zeros(k), np.zeros(k), d)


def p2_companion_replace(rho: float, lambda2: float, b1: float, tail=(),
                         tol: float = PRE_TOL) -> P2Result:
    """Replace ``(rho, lambda2)`` by the roots of
    ``w(x) = (x-gamma)^n - b1 (x-gamma)^(n-1) - b2 (x-gamma)^(n-2) - ... - bn``.

    ``tail`` holds ``b3..bn``, all nonnegative.
    """
    tail = [float(x) for x in tail]
    if close(rho, lambda2, tol):
        raise PreconditionFailed("rho must differ from lambda2", "rho-ne-lambda2")
    gamma = p2_gamma(rho, lambda2, b1)
    if not leq(0.0, gamma, tol):
        raise PreconditionFailed(f"gamma = {gamma:.6g} is negative", "GammaCondition")
    for i, bi in enumerate(tail, start=3):
        if not leq(0.0, bi, tol):
            raise PreconditionFailed(f"b{i} = {bi:.6g} is negative", f"b{i}")
    g = MonicPoly([b1, p2_b2(rho, lambda2, b1)] + tail)
    M = shifted_companion(g, gamma)
    w = char_poly(M)
    return P2Result(w, M, roots_spectrum(w), _companion_params(rho, lambda2, b1, tail))


def p2_mu_replace(rho: float, lambda2: float, n: int, delta: float, mu,
                  tol: float = PRE_TOL) -> P2Result:
    """Replace ``(rho, lambda2)`` by a prescribed list ``mu`` of length ``n >= 3``.

    ``mu`` must have ``s1 = rho + lambda2 + delta`` and
    ``s2 = rho^2 + lambda2^2 + delta^2/(n-2)``; it is then realised by a
    nonnegative companion-plus-scalar matrix of the required ``C'`` shape.
    """
    mu = mu if isinstance(mu, Spectrum) else Spectrum(mu)
    if n < 3 or len(mu) != n:
        raise PreconditionFailed(f"need n >= 3 entries, got n={n}, |mu|={len(mu)}", "n")
    if close(rho, lambda2, tol):
        raise PreconditionFailed("rho must differ from lambda2", "rho-ne-lambda2")
    if not is_conjugate_closed(mu, tol):
        raise PreconditionFailed("mu is not closed under conjugation", "closed")
    lo, hi = (n - 2) * max(0.0, lambda2), 0.5 * (n - 2) * (rho + lambda2)
    if not (leq(lo, delta, tol) and leq(delta, hi, tol)):
        raise PreconditionFailed(f"delta = {delta:.6g} outside [{lo:.6g}, {hi:.6g}]", "deltaRange")
    mu1 = mu.perron
    if abs(mu1.imag) > tol or not leq(0.0, mu1.real, tol):
        raise PreconditionFailed(f"mu_1 = {mu1} is not a nonnegative real", "mu1")
    for i, z in enumerate(mu):
        if i != mu.perron_index and not leq(z.real, delta / (n - 2), tol):
            raise PreconditionFailed(f"Re(mu_{i + 1}) = {z.real:.6g} exceeds delta/(n-2)", "real-part")
    s1, s2 = power_sum(mu, 1, tol), power_sum(mu, 2, tol)
    if not close(s1, rho + lambda2 + delta, tol):
        raise PreconditionFailed(f"s1(mu) = {s1:.6g} != rho + lambda2 + delta", "s1def")
    if not close(s2, rho**2 + lambda2**2 + delta**2 / (n - 2), tol):
        raise PreconditionFailed(f"s2(mu) = {s2:.6g} != rho^2 + lambda2^2 + delta^2/(n-2)", "s2def")
    b1 = rho + lambda2 - 2 * delta / (n - 2)
    gap = n * s2 - s1**2
    if not leq((n - 1) * b1**2, gap, tol):
        raise PreconditionFailed("(n-1) b1^2 exceeds n s2 - s1^2", "b1def")
    g, gamma = ls_companion(mu, b1, tol)
    if not close(gamma, p2_gamma(rho, lambda2, b1), 1e-8):
        raise PreconditionFailed(f"derived gamma {gamma:.12g} breaks GammaCondition", "GammaCondition")
    if not close(g.b[1], p2_b2(rho, lambda2, b1), 1e-8):
        raise PreconditionFailed(f"derived b2 {g.b[1]:.12g} breaks b2Condition", "b2Condition")
    M = shifted_companion(g, gamma)
    params = _companion_params(rho, lambda2, b1, g.b[2:])
    return P2Result(char_poly(M), M, perron_first(mu), params)
