"""Relativistic wavefunctions factorized over the ten-parameter group manifold.

The package splits into a translation part (plane-wave Dirac amplitudes,
``dirac``), a Lorentz part (associated hyperspherical functions,
``hypersph``, and radial Bessel solutions, ``radial``), their product
(``assembly``), the underlying special functions (``specfun``) and the
verification suites (``verify``).
"""

from .assembly import (
    GRID_AXES,
    GroupPoint,
    PoincareBispinor,
    SpinConfig,
    bispinor,
    grid_eval,
    lorentz_factor,
    translation_factor,
)
from .dirac import (
    DiracAmplitude,
    FourMomentum,
    GammaSet,
    adjoint,
    dirac_residual,
    dirac_residual_fd,
    gamma_set,
    momentum_slash,
    plane_wave,
    u_amplitude,
    v_amplitude,
)
from .errors import (
    DomainError,
    IntegerOrderUnsupported,
    InvalidIndex,
    NonConvergent,
    NonPositiveArgument,
    NonPositiveProduct,
    OffShellError,
    PoleInDenominator,
    SizeCapExceeded,
    TermCapExceeded,
)
from .halfint import HalfInt, half, unit_range
from .hypersph import (
    EulerAngles,
    HypersphIndex,
    index_is_evaluable,
    m_assoc,
    m_assoc_dotted,
    sum_index_values,
    z_assoc,
)
from .radial import (
    LambdaSet,
    RadialParams,
    RadialPoint,
    bessel_ode_residual,
    f1_derivative,
    f1_solution,
    f4_from_f1,
    full_system_residual,
    lambda_set,
    reduced_system_residual,
    resolve_scale,
)
from .specfun import Hyp2F1Params, bessel_j_half, bessel_j_half_derivative, hyp2f1, pochhammer
from .verify import RunReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "GRID_AXES",
    "GroupPoint",
    "PoincareBispinor",
    "SpinConfig",
    "bispinor",
    "grid_eval",
    "lorentz_factor",
    "translation_factor",
    "DiracAmplitude",
    "FourMomentum",
    "GammaSet",
    "adjoint",
    "dirac_residual",
    "dirac_residual_fd",
    "gamma_set",
    "momentum_slash",
    "plane_wave",
    "u_amplitude",
    "v_amplitude",
    "DomainError",
    "IntegerOrderUnsupported",
    "InvalidIndex",
    "NonConvergent",
    "NonPositiveArgument",
    "NonPositiveProduct",
    "OffShellError",
    "PoleInDenominator",
    "SizeCapExceeded",
    "TermCapExceeded",
    "HalfInt",
    "half",
    "unit_range",
    "EulerAngles",
    "HypersphIndex",
    "index_is_evaluable",
    "m_assoc",
    "m_assoc_dotted",
    "sum_index_values",
    "z_assoc",
    "LambdaSet",
    "RadialParams",
    "RadialPoint",
    "bessel_ode_residual",
    "f1_derivative",
    "f1_solution",
    "f4_from_f1",
    "full_system_residual",
    "lambda_set",
    "reduced_system_residual",
    "resolve_scale",
    "Hyp2F1Params",
    "bessel_j_half",
    "bessel_j_half_derivative",
    "hyp2f1",
    "pochhammer",
    "RunReport",
    "run_suite",
]
