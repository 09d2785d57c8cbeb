"""Exact-arithmetic toolkit for restricted b-ary overpartition polynomials.

Submodules:
  polyring         sparse multivariate / dense univariate exact polynomials
  enumerator       brute-force overpartition enumeration (the oracle)
  sequences        the p, Q, R families from their recurrences
  chebyshev        homogenized Chebyshev representation of Q and R
  specializations  single- and two-variable specializations and factorizations
  zeros            numerical roots and explicit zero-formula verification
  curves           implicit zero-locus curves and the quartic analysis
  cli              command-line interface and verification driver
"""

from .polyring import MultiPoly, UniPoly

__version__ = "1.0.0"

__all__ = ["MultiPoly", "UniPoly", "__version__"]
