"""Similar sublattices of planar lattices: multiplier rings, exact counts and generating functions."""

from .counting import SslCountRow, count_representations, denominator, hnf_ssl_count, ssl_counts
from .dirichlet import CoeffSeq, builder, dirichlet_convolve, euler_expand, sigma1
from .exact import LatticeSpec, QuadElem, minimal_polynomial
from .mulring import GENERIC, gram_matrix, multiplier_ring, sos_decompose, sos_group_description
from .orders import (
    BinaryQuadraticForm,
    QuadraticOrder,
    kronecker_chi,
    order_from_minpoly,
    quadelem_norm,
    reduced_forms,
    total_representation_count,
)

__all__ = [
    "BinaryQuadraticForm",
    "CoeffSeq",
    "GENERIC",
    "LatticeSpec",
    "QuadElem",
    "QuadraticOrder",
    "SslCountRow",
    "builder",
    "count_representations",
    "denominator",
    "dirichlet_convolve",
    "euler_expand",
    "gram_matrix",
    "hnf_ssl_count",
    "kronecker_chi",
    "minimal_polynomial",
    "multiplier_ring",
    "order_from_minpoly",
    "quadelem_norm",
    "reduced_forms",
    "sigma1",
    "sos_decompose",
    "sos_group_description",
    "ssl_counts",
    "total_representation_count",
]

__version__ = "0.1.0"
