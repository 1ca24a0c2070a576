"""Robin-Laplacian eigenvalues with negative boundary parameter.

Spectral toolkit for the eigenvalue problem -Δu = λu with ∂u/∂ν = αu
(α > 0) on balls and annuli in R^d: radial eigensolvers (shooting and
modified-Bessel characteristic equation), Hadamard shape derivatives of
the first eigenvalue, and runnable verifications of the monotonicity,
asymptotic, and isoperimetric claims the solvers support.
"""

__version__ = "0.1.0"

from .bessel import bessel_i, bessel_i_prime, bessel_k, bessel_k_prime
from .domains import Annulus, Ball, ModeSpec, RobinProblem, measures, unit_ball_volume
from .eigensolver import (
    Eigenpair,
    SolverConfig,
    SolverError,
    assemble_spectrum,
    characteristic_det,
    default_window,
    eigenvalue_bessel,
    find_eigenvalues,
    rayleigh_quotient,
    shoot,
)
from .shape import (
    BoundaryField,
    DerivativeReport,
    OUTER_NORMAL,
    RiccatiTrace,
    dG_dr2_fd,
    dG_dr2_paper,
    fd_derivative,
    hadamard_derivative,
    hadamard_vs_fd,
    riccati_trace,
    stationarity_G,
    volume_preserving_pair,
)
from .suite import (
    VerificationReport,
    crossing_search,
    pinch_check,
    run_suite,
    steklov_ball,
    verify_asymptotics,
    verify_negativity_bound,
    verify_theorem1,
    verify_theorem2_radial,
)
