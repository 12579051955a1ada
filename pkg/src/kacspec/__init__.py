"""Exact spectral theory of Sylvester-Kac type tridiagonal matrices."""

from .errors import ConsistencyError, DomainError
from .exactnum import (
    Polynomial,
    QuadExt,
    Rational,
    binomial,
    pochhammer,
    poly_divide,
    poly_eval,
    quad_inv,
    quad_make,
    quad_mul,
)
from .matrices import (
    Tridiagonal,
    build_abc,
    build_appendix_matrix,
    build_general,
    build_hahn,
    build_sylvester_kac,
    char_poly,
    diag_similarity,
    is_persymmetric,
    matvec,
    reversal_similarity,
)
from .spectral import (
    DegenerateReport,
    EigenPair,
    degenerate_analysis,
    eigenvalues_abc,
    eigenvalues_general,
    eigenvector_abc,
    eigenvector_general,
    left_to_right,
    verify_eigenpair,
)

__version__ = "0.1.0"
