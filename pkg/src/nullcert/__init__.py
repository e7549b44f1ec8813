"""Exact search and verification of Hilbert Nullstellensatz certificates
``sum_i f_i g_i == 1`` for polynomial systems over Q(i)."""

from nullcert.certificate import AnsatzSpec, Certificate, NoSolution, SizeLimitExceeded
from nullcert.monomial import mono_compare, mono_rank, mono_unrank
from nullcert.polynomial import Polynomial, PolySystem, Term, canonicalize, parse_poly, system
from nullcert.scalar import GaussianRational, gq

__version__ = "0.1.0"

__all__ = [
    "AnsatzSpec",
    "Certificate",
    "GaussianRational",
    "NoSolution",
    "PolySystem",
    "Polynomial",
    "SizeLimitExceeded",
    "Term",
    "canonicalize",
    "gq",
    "mono_compare",
    "mono_rank",
    "mono_unrank",
    "parse_poly",
    "system",
]
