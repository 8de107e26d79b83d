"""Fisher information of the half-line hydrogen atom and the infinite well.

Closed-form waveforms and Fisher informations are cross-checked against
adaptive quadrature and a numerical Fourier transform.
"""

from .fisher import (
    FisherReport,
    Space,
    build_report,
    fisher_closed_hydrogen,
    fisher_momentum,
    fisher_position,
    inner_product,
    orthonormality_check,
    well_fisher_momentum_direct,
    well_fisher_momentum_via_position,
)
from .quadrature import (
    Finite,
    IntegralResult,
    QuadratureConfig,
    SemiInfinite,
    WholeLine,
    fourier_transform_numeric,
    integrate,
)
from .specfun import kummer_m, laguerre, laguerre_derivative, laguerre_rodrigues_oracle
from .systems import (
    BoundState,
    System,
    hydrogen_cutoff,
    hydrogen_energy,
    hydrogen_gamma,
    hydrogen_phi,
    hydrogen_psi,
    hydrogen_psi_derivative,
    hydrogen_rho,
    schrodinger_residual,
    well_energy,
    well_psi,
)
from .verify import run_verification

__version__ = "0.1.0"
