"""Algebraic reliability of binary and multi-state coherent systems.

Systems are encoded as monomial ideals generated by their minimal working
states. Reliability is evaluated three ways that must agree: a brute-force
state oracle, improved inclusion-exclusion from resolution data, and a sum
of disjoint products from involutive (Janet or Pommaret) bases. Stability
notions, their closures, and component importance measures round out the
toolkit.
"""
from .errors import (
    BoxTooLarge,
    CompletionOverflow,
    DimensionMismatch,
    EmptyIdeal,
    InvalidCumulative,
    NotBinarySystem,
    NotQuasiStable,
    NotSquarefree,
    NotSquarefreeStable,
    NotStable,
    NotStronglyStable,
    RelialgError,
    SystemFileError,
    TooManyComponents,
    TooManyGenerators,
)
from .families import (
    bridge_system,
    consecutive_k_out_of_n,
    k_out_of_n,
    random_probabilities,
    random_system,
    threshold_with_joker,
)
from .importance import (
    EQUAL,
    I_DOMINATES,
    INCOMPARABLE,
    J_DOMINATES,
    Assignment,
    deleted_multiplicity,
    multiplicity_importance,
    optimal_assignment,
    permutation_compare,
    structural_importance,
    swap_monotonicity,
)
from .involutive import (
    InvolutiveBasis,
    involutive_divisor,
    janet_completion,
    janet_completion_iterative,
    janet_multiplicative,
    pommaret_completion,
    pommaret_multiplicative,
)
from .monomials import (
    Mono,
    MonomialIdeal,
    artinian_closure,
    canonical,
    cumulative,
    delete_variable,
    divides,
    from_cumulative,
    lcm,
    minimal_generators,
    minimalize,
    multiplicity,
    permute,
    zero_ideal,
)
from .reliability import (
    CrossValidation,
    bonferroni_bounds,
    cross_validate,
    evaluate_numerator,
    reliability_iie,
    reliability_sdp,
    sdp_value,
)
from .resolution import (
    AdmissibleSymbol,
    HilbertNumerator,
    ResolutionSummary,
    ah_symbols,
    classical_ie,
    classical_ie_summary,
    ek_symbols,
    hilbert_numerator,
)
from .stability import (
    StabilityReport,
    closure_oracle,
    find_stable_orderings,
    fully_stable_closure_binary,
    is_squarefree_stable_ideal,
    is_squarefree_strongly_stable_ideal,
    is_stable_ideal,
    is_strongly_stable_ideal,
    strongly_stable_closure,
    system_stability,
)
from .sysfile import load_system, save_system, system_from_dict, system_to_dict
from .systems import (
    ProbabilityModel,
    ReliabilityResult,
    SystemSpec,
    binary_probabilities,
    make_system,
    phi,
    probability_model,
    reliability_ideal,
    reliability_oracle,
    state_probability,
    upset_probability,
    validate,
)

__version__ = "0.1.0"
