"""Exact tables for special cycles and cohomology of SO0(2,m).

Everything is computed in exact arithmetic over Q(i): the Lie algebra
so(2,m) with its Chevalley bases, the catalog of involutions commuting with
the Cartan involution, orientation determinants of their fixed groups,
theta-stable parabolic classes with Poincare-Hodge polynomials, and the
decision procedure for which cycle classes have no component on a given
cohomological summand.
"""

from .exact import GaussianRational, HodgePolynomial
from .liealg import ExactMatrix, LieContext, build_context
from .roots import Root, RootSystem, build_root_system

__all__ = [
    "GaussianRational",
    "HodgePolynomial",
    "ExactMatrix",
    "LieContext",
    "build_context",
    "Root",
    "RootSystem",
    "build_root_system",
]

__version__ = "0.1.0"
