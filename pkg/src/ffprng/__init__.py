"""Sequence families from rational and elliptic function fields over F_q.

Subpackages: field towers (galois, polyring), function fields and places
(ratfield, elliptic), power-series helpers (series), family generation
(seqgen), randomness measurements (analysis), theorem bounds and reports
(bounds), and a CLI (cli).
"""

from .galois import (FiniteField, FieldExtension, ParameterError,
                     SizeCapError, build_field, extend_field,
                     count_irreducibles)
from .ratfield import RationalFunctionField
from .elliptic import EllipticCurve, search_cyclic_curve, admissible_trace
from .seqgen import (generate_sequence, rational_family, elliptic_family,
                     least_period)
from .analysis import (linear_complexity, lc_profile, d_perfect,
                       periodic_correlation, correlation_spectrum,
                       pattern_count, nonlinear_complexity, exp_sum)
from .bounds import (BoundInputs, verify_family, weil_bound,
                     period_guarantee, lc_bound_prime, lc_bound_general,
                     correlation_bound, pattern_bound, nlc_bound,
                     comparison_remarks)

__version__ = "0.1.0"
