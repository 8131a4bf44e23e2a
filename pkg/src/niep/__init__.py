"""Constructions and certificates for nonnegative matrices with prescribed spectra."""

from .errors import NIEPError
from .matrix import (EigStructure, char_poly, complex_eigvec_pair, eigenvalues, is_nonnegative,
                     min_entry, normalize_perron, real_eigvec, with_real_eigvec)
from .poly import (MonicPoly, coeffs_from_power_sums, evaluate, from_roots, roots,
                   roots_spectrum, shifted_companion)
from .spectra import (ConditionReport, Spectrum, check_necessary, is_conjugate_closed,
                      perron_of, power_sum, shift)
from .verify import Certificate, certify, match_spectra

__version__ = "0.1.0"

__all__ = [
    "NIEPError",
    "EigStructure", "char_poly", "complex_eigvec_pair", "eigenvalues", "is_nonnegative",
    "min_entry", "normalize_perron", "real_eigvec", "with_real_eigvec",
    "MonicPoly", "coeffs_from_power_sums", "evaluate", "from_roots", "roots",
    "roots_spectrum", "shifted_companion",
    "ConditionReport", "Spectrum", "check_necessary", "is_conjugate_closed",
    "perron_of", "power_sum", "shift",
    "Certificate", "certify", "match_spectra",
]
