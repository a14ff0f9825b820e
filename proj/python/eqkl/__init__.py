"""Exact equivariant Kazhdan-Lusztig polynomials of Boolean and uniform
matroids, with Schur-basis symmetric function coefficients."""

from ._eqkl import *  # noqa: F401,F403
from ._eqkl import __version__  # noqa: F401
