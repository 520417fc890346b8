"""Verified numerics for G(z) = (1 - Log z / Log(1+z)) z Log z.

G on the cut plane, its density rho, the Laplace kernel phi, and a harness
that checks every integral representation and structural property of them.
"""

from .cutplane import (
    BoundaryValue,
    CutPlanePoint,
    eval_g_boundary,
    eval_g_direct,
    eval_g_prime_direct,
    eval_one_minus_g,
    principal_log,
)
from .density import T0, DensityConstants, density_constants, rho, rho_asymptotic
from .errors import DomainError
from .quad import QuadratureError, QuadratureResult, TailSpec
from .transforms import (
    MomentQuery,
    g_moment,
    im_g_cartesian,
    im_g_prime_polar,
    phi,
    plancherel_pair,
    reconstruct_one_minus_g,
    stieltjes_g,
)

__version__ = "0.1.0"
