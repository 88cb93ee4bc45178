"""cosasym: evaluation and asymptotics of multivariate cosine lattice series.

Evaluates F(theta) = Sum over nonzero integer lattice points z of
|z|^-(d+alpha) (1 - cos<z, theta>) (max-norm), its one-dimensional
building block H, the dimension-reduction decomposition, the homogeneous
prefactor A in integral and closed forms, the three-regime small-theta
asymptotics, and generalized coefficient models — every truncated value
paired with a rigorous tail bound, and every identity cross-checkable
between two independent evaluators.
"""

from .asymptotics import (
    A_closed,
    A_integral,
    AsymptoticValue,
    hstar,
    regime,
    signed_power,
    super2_coefficient,
    theorem2_asym,
)
from .backend import BACKEND_NAME, get_backend
from .combinatorics import (
    IndexPartition,
    SignPattern,
    enumerate_partitions,
    enumerate_signs,
    odd_set,
)
from .decomposition import QuadratureSpec, box_integral_H, cot_defect, theorem1_rhs
from .errors import BudgetError, DomainError, PoleError, SingularityError
from .series import (
    CoefficientModel,
    ErrorBudget,
    Point,
    SeriesValue,
    eval_F_general,
    eval_F_kernel,
    eval_F_lattice,
    eval_H,
    iterate_shell,
    shell_count,
)
from .special import AlphaParam, Regime, gamma, hardy_constant, zeta

__version__ = "0.1.0"

__all__ = [
    "A_closed",
    "A_integral",
    "AlphaParam",
    "AsymptoticValue",
    "BACKEND_NAME",
    "BudgetError",
    "CoefficientModel",
    "DomainError",
    "ErrorBudget",
    "IndexPartition",
    "Point",
    "PoleError",
    "QuadratureSpec",
    "Regime",
    "SeriesValue",
    "SignPattern",
    "SingularityError",
    "box_integral_H",
    "cot_defect",
    "enumerate_partitions",
    "enumerate_signs",
    "eval_F_general",
    "eval_F_kernel",
    "eval_F_lattice",
    "eval_H",
    "gamma",
    "get_backend",
    "hardy_constant",
    "hstar",
    "iterate_shell",
    "odd_set",
    "regime",
    "shell_count",
    "signed_power",
    "super2_coefficient",
    "theorem1_rhs",
    "theorem2_asym",
    "zeta",
]
