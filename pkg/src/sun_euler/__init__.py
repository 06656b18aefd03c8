"""Generalized Euler angle parametrization of SU(N)."""
from .density_matrix import (
    DensitySpec,
    DiagonalDensity,
    density,
    rho_coefficients,
    rho_diagonal,
    theta_ranges,
)
from .errors import ConsistencyError, DomainError, InvalidDimensionError
from .euler_param import (
    EulerFactor,
    FactorSequence,
    ParamVector,
    factor_exponential,
    factor_sequence,
    j_offset,
    unitary,
    unitary_batch,
    unitary_dagger,
    unitary_transpose,
)
from .group_volume import (
    VolumeResult,
    marinov_volume,
    monte_carlo_volume,
    omega,
    quadrature_volume,
)
from .haar_measure import (
    KernelTerm,
    OneFormCoefficients,
    kernel,
    kernel_oracle,
    kernel_terms,
    one_form_coefficients,
)
from .haar_sampler import HaarSampler, SamplerConfig, sample_angles, sample_density, sample_unitary
from .lie_algebra import (
    CartanSplit,
    GeneratorSet,
    StructureConstants,
    cartan_split,
    make_generators,
    structure_constants,
)
from .param_ranges import RangeSet, covering_ranges, quotient_ranges

__version__ = "0.1.0"
