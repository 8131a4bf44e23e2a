"""Candidate spectra and the classical necessary conditions for realisability."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import NoPerron, NotClosed
from .matching import bottleneck_match

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Ordered list of complex eigenvalues with a designated Perron entry.

    By convention the Perron entry is first (``perron_index == 0``).
    """

    entries: tuple[complex, ...]
    perron_index: int = 0

    def __init__(self, entries: Iterable, perron_index: int = 0):
        vals = tuple(complex(x) for x in entries)
        if not vals:
            raise ValueError("a spectrum needs at least one entry")
        if not 0 <= perron_index < len(vals):
            raise ValueError(f"perron_index {perron_index} out of range")
        object.__setattr__(self, "entries", vals)
        object.__setattr__(self, "perron_index", perron_index)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=complex)

    @property
    def perron(self) -> complex:
        return self.entries[self.perron_index]

    def to_json(self) -> list[list[float]]:
        """Encode as ``[[re, im], ...]`` with the Perron entry first."""
        order = [self.perron_index] + [i for i in range(len(self)) if i != self.perron_index]
        return [[self.entries[i].real, self.entries[i].imag] for i in order]

    @classmethod
    def from_json(cls, data) -> "Spectrum":
        if isinstance(data, str):
            data = json.loads(data)
        vals = []
        for item in data:
            if isinstance(item, (list, tuple)):
                re, im = item
                vals.append(complex(re, im))
            else:
                vals.append(complex(item))
        return cls(vals)

    def __repr__(self) -> str:
        body = ", ".join(_fmt(z) for z in self.entries)
        return f"Spectrum({body})"


def _fmt(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.6g}"
    return f"{z.real:.6g}{z.imag:+.6g}i"


def _as_spectrum(sigma) -> Spectrum:
    return sigma if isinstance(sigma, Spectrum) else Spectrum(sigma)


def _scale(values: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(values)))) if values.size else 1.0


def is_conjugate_closed(sigma, tol: float = DEFAULT_TOL) -> bool:
    """True iff the multiset equals its conjugate up to ``tol`` (scaled by max modulus)."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    vals = _as_spectrum(sigma).as_array()
    dist, _ = bottleneck_match(vals, vals.conj())
    return dist <= tol * _scale(vals)


def perron_index(sigma, tol: float = DEFAULT_TOL) -> int:
    """Index of the entry that is a nonnegative real equal to the spectral radius.

    Ties go to the first such entry.
    """
    vals = _as_spectrum(sigma).as_array()
    rho = float(np.max(np.abs(vals)))
    slack = tol * _scale(vals)
    for i, z in enumerate(vals):
        if abs(z.imag) <= slack and z.real >= -slack and abs(z.real - rho) <= slack:
            return i
    raise NoPerron(f"maximum modulus {rho:.6g} is not attained by a nonnegative real entry")


def perron_of(sigma, tol: float = DEFAULT_TOL) -> float:
    sigma = _as_spectrum(sigma)
    return float(sigma[perron_index(sigma, tol)].real)


def perron_first(sigma, tol: float = DEFAULT_TOL) -> Spectrum:
    """Reorder so the Perron entry is first; other entries keep their order."""
    sigma = _as_spectrum(sigma)
    k = perron_index(sigma, tol)
    rest = [z for i, z in enumerate(sigma) if i != k]
    return Spectrum([sigma[k]] + rest)


def power_sum(sigma, m: int, tol: float = DEFAULT_TOL) -> float:
    """Real power sum ``sum(lambda_i ** m)``; raises NotClosed on an imaginary residue."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    vals = _as_spectrum(sigma).as_array()
    total = np.sum(vals**m)
    magnitude = float(np.sum(np.abs(vals) ** m))
    if abs(total.imag) > tol * max(1.0, magnitude):
        raise NotClosed(f"imaginary part {total.imag:.3g} of s_{m} exceeds tolerance")
    return float(total.real)


@dataclass
class ConditionReport:
    closed: bool
    perron_ok: bool
    trace_sums_ok: bool
    jll_ok: bool
    m_max: int
    details: dict = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return self.closed and self.perron_ok and self.trace_sums_ok and self.jll_ok

    def to_json(self) -> dict:
        return {
            "closed": self.closed,
            "perron_ok": self.perron_ok,
            "trace_sums_ok": self.trace_sums_ok,
            "jll_ok": self.jll_ok,
            "m_max": self.m_max,
            "details": self.details,
        }


def check_necessary(sigma, m_max: int | None = None, tol: float = DEFAULT_TOL) -> ConditionReport:
    """Evaluate conjugate closure, the Perron condition, nonnegative power sums
    ``s_m`` for ``m <= m_max`` and the JLL inequalities for ``k*m <= m_max``.

    Failures are reported, never raised. ``m_max`` defaults to ``2n``.
    """
    sigma = _as_spectrum(sigma)
    n = len(sigma)
    if m_max is None:
        m_max = 2 * n
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    vals = sigma.as_array()
    details: dict = {}

    closed = is_conjugate_closed(sigma, tol)
    if not closed:
        dist, _ = bottleneck_match(vals, vals.conj())
        details["closed"] = {"mismatch": dist}

    try:
        rho = perron_of(sigma, tol)
        perron_ok = True
        details["perron"] = {"rho": rho}
    except NoPerron:
        perron_ok = False
        details["perron"] = {"max_modulus": float(np.max(np.abs(vals)))}

    # power sums taken as real parts; closure failures are already flagged above
    s = {m: float(np.sum(vals**m).real) for m in range(1, m_max + 1)}
    mags = {m: float(np.sum(np.abs(vals) ** m)) for m in range(1, m_max + 1)}

    trace_sums_ok = True
    for m in range(1, m_max + 1):
        if s[m] < -tol * max(1.0, mags[m]):
            trace_sums_ok = False
            details["trace_sums"] = {"m": m, "s_m": s[m]}
            break

    jll_ok = True
    worst = None
    for k in range(1, m_max + 1):
        for m in range(2, m_max // k + 1):
            lhs = s[k] ** m
            rhs = n ** (m - 1) * s[k * m]
            slack = tol * max(1.0, abs(lhs), n ** (m - 1) * mags[k * m])
            if lhs > rhs + slack:
                jll_ok = False
                worst = {"k": k, "m": m, "lhs": lhs, "rhs": rhs}
                break
        if not jll_ok:
            break
    if worst is not None:
        details["jll"] = worst

    return ConditionReport(closed, perron_ok, trace_sums_ok, jll_ok, m_max, details)


def shift(sigma, delta: complex) -> Spectrum:
    """Subtract ``delta`` from every entry; the Perron position is unchanged."""
    sigma = _as_spectrum(sigma)
    return Spectrum([z - delta for z in sigma], sigma.perron_index)


def jll_gap(sigma: Sequence[complex]) -> complex:
    """``n * s_2 - s_1 ** 2``, which is invariant under ``shift``."""
    vals = np.asarray(list(sigma), dtype=complex)
    return vals.size * np.sum(vals**2) - np.sum(vals) ** 2
