"""Multilevel Monte Carlo for one-dimensional Levy-driven SDEs.

Jump-adapted Euler schemes (idealised, direct-simulation and truncated
shot-noise variants), coupled coarse/fine level simulation, CLT-based
replication schedules, the limit error process with its analytic variance
oracles, and the cost model for choosing the refinement factor.
"""

from .backend import DEFAULT_BACKEND, HAVE_COMPILED, available_backends
from .engine import (
    LevelSchedule,
    LevelStats,
    MlmcEstimate,
    ReplicationPlan,
    level_profile,
    make_plan,
    make_schedule,
    run_estimator,
    validate_schedule,
)
from .errors import (
    ConfigError,
    InfeasibleScheduleError,
    LevyMlmcError,
    NumericError,
    SchemeUnsupportedError,
)
from .functionals import (
    FunctionalSpec,
    IntegralComponent,
    LinearMapSpec,
    Marginal,
    SmoothFn,
    asian_call,
    eval_functional,
    eval_linear,
    eval_supremum,
    european_call,
    gradient_at,
    identity_marginal,
    integral_average,
    lookback,
    lookback_call,
    terminal_plus_average,
)
from .levy import (
    BigJumpBatch,
    CompoundPoissonMeasure,
    ConstantJump,
    GaussianJump,
    LevyTriplet,
    StableLikeMeasure,
    UniformJump,
    UserTabulatedMeasure,
    ZeroMeasure,
    compensated_drift,
    sample_big_jumps,
    small_jump_increment,
    tail_mass,
    truncated_second_moment,
)
from .limits import (
    JumpMarks,
    UpsilonParams,
    VarianceOracleResult,
    phi_formula,
    rho_sq_oracle,
    sample_marks,
    simulate_U,
    upsilon_sq,
)
from .paths import (
    CoupledPaths,
    PairParams,
    PathSkeleton,
    UpdateTimeline,
    build_timeline,
    replay_marginal,
    simulate_coupled,
    simulate_single,
)
from .rng import RandomStream
from .sde import SdeModel, coefficient_from_config
from .tuning import CostModel, m_curve, optimal_M, predicted_cost, rescaled_delta

__version__ = "0.1.0"
