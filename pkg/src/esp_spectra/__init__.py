"""Exact spectrahedral representations of hyperbolicity cones of elementary symmetric polynomials."""

from .errors import (DegreeError, DimensionError, EspSpectraError, GuardExceeded, InadmissibleBasePoint,
                     InconclusiveError, NotHyperbolicError, PoleError)
from .export import (parse_point, parse_rational, pencil_from_json, pencil_from_sdpa, pencil_to_json,
                     pencil_to_sdpa, read_forms)
from .graph import Edge, Graph, LabeledGraph, Vertex, assign_weights, build_G, spanning_tree_polynomial, \
    weighted_laplacian, reduced_laplacian
from .linalg import PsdCertificate, PsdVerdict, SymMatrix, det_exact, det_polynomial, psd_check_exact
from .pencil import (LinearFormsSystem, Pencil, Verdict, build_esp_pencil, derivative_cone_pencil,
                     membership, pencil_eval)
from .poly import (Polynomial, RationalFunction, check_engine_recursion, directional_derivative, elem_sym,
                   evaluate, partial_derivative, q_ratio, restrict_univariate)
from .univariate import UnivariatePolynomial
from .verify import (Report, TrialConfig, oracle_membership_esp, root_oracle_membership, run_suite,
                     verify_cone_equivalence, verify_factor_cone_inclusion, verify_hkk_identity,
                     verify_matrix_tree, verify_step_recursion)

__version__ = "0.1.0"

__all__ = [
    "DegreeError",
    "DimensionError",
    "Edge",
    "EspSpectraError",
    "Graph",
    "GuardExceeded",
    "InadmissibleBasePoint",
    "InconclusiveError",
    "LabeledGraph",
    "LinearFormsSystem",
    "NotHyperbolicError",
    "Pencil",
    "PoleError",
    "Polynomial",
    "PsdCertificate",
    "PsdVerdict",
    "RationalFunction",
    "Report",
    "SymMatrix",
    "TrialConfig",
    "UnivariatePolynomial",
    "Verdict",
    "Vertex",
    "assign_weights",
    "build_G",
    "build_esp_pencil",
    "check_engine_recursion",
    "derivative_cone_pencil",
    "det_exact",
    "det_polynomial",
    "directional_derivative",
    "elem_sym",
    "evaluate",
    "membership",
    "oracle_membership_esp",
    "parse_point",
    "parse_rational",
    "partial_derivative",
    "pencil_eval",
    "pencil_from_json",
    "pencil_from_sdpa",
    "pencil_to_json",
    "pencil_to_sdpa",
    "psd_check_exact",
    "q_ratio",
    "read_forms",
    "reduced_laplacian",
    "restrict_univariate",
    "root_oracle_membership",
    "run_suite",
    "spanning_tree_polynomial",
    "verify_cone_equivalence",
    "verify_factor_cone_inclusion",
    "verify_hkk_identity",
    "verify_matrix_tree",
    "verify_step_recursion",
    "weighted_laplacian",
]
