"""Sinc approximation of exponentially decaying functions on (0, inf).

Two conformal maps carry the half line to the real line:
``psi(x) = arcsinh(e^x)`` and ``phi(x) = log(1 + e^x)``.  The second allows a
strip twice as wide and hence a faster root-exponential rate.  The package
builds both approximants, evaluates their a-priori error bounds, and checks
the supporting inequalities numerically.

>>> from sinc_expdecay import example, build_approximant, MapKind
>>> ex = example("f2")
>>> a = build_approximant(ex.eval, ex.profile(MapKind.LOGISTIC_LOG), 40)
>>> round(a(1.0), 5)
0.29249
"""

from .bounds import (BoundVariant, bound_constant, discretization_bound, n1_norm_bound,
                     stenger_discretization, total_bound, truncation_bound, variant_for)
from .errors import AdmissibilityError, BranchError, BuildError, SincDomainError
from .lemmas import (LEMMA, LemmaConstants, SampleReport, check_decay_condition,
                     check_essential_inequality, check_exp_bound, check_p_nonneg,
                     check_real_line_bound, limit_values, run_all)
from .maps import (BoundaryCurve, MapKind, domain_boundary, in_domain, map_derivative,
                   map_forward, map_forward_complex, map_inverse)
from .sinc import (Approximant, DecayProfile, SincParams, build_approximant, evaluate,
                   evaluate_batch, select_params, sinc_kernel)
from .testbed import (ErrorReport, ExampleFunction, convergence_sweep, evaluation_grid,
                      example, observed_error, rate_fit)

__version__ = "0.1.0"
