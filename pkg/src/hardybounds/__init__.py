"""Two-sided estimates for the optimal constant in Hardy-type inequalities
with two sigma-finite Borel measures on the real line."""

from .cantor import (
    LevelMApprox,
    cantor_cdf,
    cantor_cdf_array,
    cantor_inverse_cdf,
    level_m_atoms,
    weak_convergence_check,
)
from .constants import (
    BoundReport,
    Exponents,
    RefineConfig,
    bound_report,
    compute_B,
    divergence_ratio,
    euler_beta,
    h_value,
    k_literature,
    k_sharp,
    triadic_profile,
)
from .errors import MeasureError, QuadratureError, ResourceError, SpecParseError
from .measures import (
    AtomicMeasure,
    CantorMeasure,
    DensityMeasure,
    GenericPiece,
    IntervalQuery,
    Measure,
    PowerLawPiece,
    TailRule,
    TransformedMeasure,
    WeightedMeasure,
    WeightRule,
    counting_measure,
    dominates,
    lebesgue,
    power_density,
    pushforward_check,
)
from .specs import parse_measure, parse_measure_spec, serialize_measure
from .variational import (
    Bliss,
    BlissComposed,
    PiecewiseConstant,
    PowerTail,
    RayleighResult,
    Step,
    bliss_trial,
    certify_lower_bound,
    optimize_quotient,
    oracle_p2q2,
    rayleigh,
)

__version__ = "0.1.0"
