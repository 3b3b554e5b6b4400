"""Multiplicative complex calculus on the Riemann surface of the logarithm."""

from .alphacalc import AlphaSystem, alpha_arith, alpha_derivative, alpha_integral, get_system, relativistic_add
from .bnum import (
    BNumber, approx_eq, branch_index, div, embed_complex, embed_real, in_branch, make_bnum, mul,
    pow_complex, project, root_n,
)
from .catalog import entry as catalog_entry
from .contour import Contour, arc, make_contour, polyline, ray, rectangle, segment
from .elemfn import bexp, blog, lift, trig_hyp, unlift
from .errors import BDomainError, NotStarDifferentiable, ParseError, QuadratureError, StarCalcError
from .expr import evaluate, parse_expression, to_text
from .starderiv import (
    PolarComplexFunction, catalog_star_derivative, complex_derivative_polar, cr_check, log_derivative,
    star_derivative, star_derivative_field,
)
from .starint import additive_recovery, ftc_ratio, integrands, star_integral, star_integral_detail
from .surfacefn import PartialsAt, SurfaceFunction, constant, eval_at, partials_at

__version__ = "0.1.0"
