"""Frobenius series of the Lamé equation: coefficients, convergence domains,
Poincaré-Perron analysis and the double-sum divergence experiment."""

from lameconv.domain import (
    AlgebraicCase,
    CaseTag,
    DomainCriterion,
    classify_algebraic,
    is_in_domain,
    radius,
    sample_boundary,
    weierstrass_bound,
)
from lameconv.elliptic import am, complete_K, incomplete_F, sn, xi_of_z
from lameconv.errors import (
    ComplexRootsError,
    DegenerateSingularityError,
    DoubleSumOverflowError,
    EqualModuliError,
    LameError,
    ParameterDomainError,
    PoleError,
    ZeroCoefficientError,
)
from lameconv.experiments import (
    DoubleSumSpec,
    ExperimentRow,
    double_sum,
    double_sum_mp,
    generating_value,
    run_compare,
    run_domain_scan,
    run_table2,
)
from lameconv.perron import (
    CharacteristicRoots,
    ConvergenceVerdict,
    Verdict,
    characteristic_roots,
    classify_point,
    corrected_radius,
    pp_radius,
    ratio_limit_estimate,
)
from lameconv.recurrence import (
    AlgebraicParameters,
    CoefficientSequence,
    LimitPair,
    WeierstrassParameters,
    asymptotic_sequence,
    coefficients_at,
    generate_sequence,
    limits,
    normalized_coefficients,
    partial_sum,
    weierstrass_to_algebraic,
)

__version__ = "0.1.0"
