"""Exact Clifford-algebra representations and relativistic wave equations."""

__version__ = "0.1.0"

from clifford_rqm import algebra, dispersion, equations, representations
from clifford_rqm.exceptions import CliffordError

__all__ = ["CliffordError", "algebra", "dispersion", "equations", "representations"]
