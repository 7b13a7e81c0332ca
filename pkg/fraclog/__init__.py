"""fraclog: explicit constants for fractional and L^q/W^{1,p} logarithmic Sobolev inequalities.

Evaluates the sharp Sobolev, Gagliardo-Nirenberg-Sobolev and log-Sobolev constants in
log space, and checks every inequality, equality case and large-dimension asymptotic
on spectral grids and high-dimensional radial quadrature.
"""

__version__ = "0.1.0"
__all__ = ["__version__"]
