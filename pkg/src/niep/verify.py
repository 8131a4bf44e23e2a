"""Certificates binding a matrix to a target spectrum."""

from __future__ import annotations

from dataclasses import dataclass


from .matching import bottleneck_match
from .matrix import as_matrix, eigenvalues, min_entry
from .spectra import Spectrum

TOL_NONNEG = 1e-10
TOL_SPEC = 1e-8


def match_spectra(computed, target) -> float:
    """Largest distance under the assignment minimising the largest distance."""
    dist, _ = bottleneck_match(list(computed), list(target))
    return dist


@dataclass(frozen=True)
class Certificate:
    matrix_order: int
    min_entry: float
    spectral_residual: float
    target: Spectrum
    passed: bool
    theorem: str = ""

    def to_json(self) -> dict:
        return {
            "matrix_order": self.matrix_order,
            "min_entry": self.min_entry,
            "spectral_residual": self.spectral_residual,
            "target": self.target.to_json(),
            "pass": self.passed,
            "theorem": self.theorem,
        }


def certify(A, target, tol_nonneg: float = TOL_NONNEG, tol_spec: float = TOL_SPEC,
            theorem: str = "") -> Certificate:
    """Check ``A >= 0`` (to ``tol_nonneg``) and that its eigenvalues match ``target``
    within ``tol_spec`` (absolute, under the bottleneck assignment)."""
    M = as_matrix(A)
    target = target if isinstance(target, Spectrum) else Spectrum(target)
    lo = min_entry(M)
    resid = match_spectra(eigenvalues(M), target.as_array())
    ok = lo >= -tol_nonneg and resid < tol_spec
    return Certificate(M.shape[0], lo, resid, target, bool(ok), theorem)
