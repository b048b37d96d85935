"""Quantum hyperbolic and Kashaev link invariants from braid closures.

The package computes two families of link invariants at odd integer order
N: the state-sum values built from cyclotomic matrix dilogarithms dressed
with symmetrization walls, and the Kashaev R-matrix values they recover.
Everything is exact finite linear algebra over numpy arrays; `verify`
replays the tensor identities the construction rests on, and `asympt`
probes the exponential growth of the figure-eight sequence.
"""

from .asympt import fig8_kashaev, fig8_volume, lobachevsky, vc_sweep
from .kashaev import bridge_residuals, kashaev_eybo, kashaev_r
from .links import (CATALOG, BraidWord, InvariantValue, hk_pair, invariant,
                    operators, tangle_scalar)
from .qh_core import (NthRootModuli, braiding, braiding_closed_form,
                      decoration, enhanced_ybo, matrix_dilog_L,
                      matrix_dilog_R, nth_root_moduli, standard_decorations,
                      tilde_R, wall_closed_form, wall_tensor)
from .specfun import RootSystem, eq_mod_n
from .tensor import DenseTensor, InfeasibleSizeError
from .verify import SUITES, run_suites

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "CATALOG", "DenseTensor", "InfeasibleSizeError",
    "InvariantValue", "NthRootModuli", "RootSystem", "SUITES",
    "braiding", "braiding_closed_form", "bridge_residuals", "decoration",
    "enhanced_ybo", "eq_mod_n", "fig8_kashaev", "fig8_volume", "hk_pair",
    "invariant", "kashaev_eybo", "kashaev_r", "lobachevsky",
    "matrix_dilog_L", "matrix_dilog_R", "nth_root_moduli", "operators",
    "run_suites", "standard_decorations", "tangle_scalar", "tilde_R",
    "vc_sweep", "wall_closed_form", "wall_tensor",
]
