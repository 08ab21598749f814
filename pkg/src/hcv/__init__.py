"""Zero-location and determinant verification for convolutions of harmonic shears."""

from .cpoly import Polynomial, TruncatedSeries, find_roots, reciprocal_conjugate
from .harmonic import build_p, convolve, dilatation_pi2, make_F_a, make_f_beta, special_case_polys
from .verifier import table_verify, verify_point
from .zerolocation import DiskClass, cohn_chain, schur_cohn_minors, zeros_in_closed_disk

__version__ = "0.1.0"

__all__ = [
    "DiskClass", "Polynomial", "TruncatedSeries", "build_p", "cohn_chain", "convolve",
    "dilatation_pi2", "find_roots", "make_F_a", "make_f_beta", "reciprocal_conjugate",
    "schur_cohn_minors", "special_case_polys", "table_verify", "verify_point", "zeros_in_closed_disk",
]
