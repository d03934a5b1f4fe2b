"""Root functionals and ideal slices of square polynomial systems via bounded
root functionals and the Bezoutian extension product."""

from .bezoutian import bezout_det, bezout_matrix, bordered_det, divided_difference
from .fields import GF, QQ, count_ops
from .functionals import (BoundedFunctional, ExtensionOperator, apply, apply_y, extend,
                          extension_operator, power)
from .poly import DoublePoly, InvalidSystem, MonomialBasis, Poly, PolySystem, monomial_basis, truncate
from .solver import NotZeroDimensional, SolveResult, solve

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "count_ops",
    "Poly", "DoublePoly", "PolySystem", "MonomialBasis", "InvalidSystem", "monomial_basis", "truncate",
    "divided_difference", "bezout_matrix", "bezout_det", "bordered_det",
    "BoundedFunctional", "ExtensionOperator", "apply", "apply_y", "extension_operator", "extend", "power",
    "solve", "SolveResult", "NotZeroDimensional",
]
