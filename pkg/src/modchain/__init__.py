"""Representations of powers of 3 as sums of n distinct powers of 2 (and the
mirror problem) via congruence solving along a chain of moduli."""

from .chains import (
    Chain,
    ChainFile,
    ChainStep,
    StepOrders,
    bundled_chain,
    bundled_chain_text,
    direction_bases,
    load_chain_file,
    parse_chain_file,
)
from .errors import (
    BaseModulusTooLarge,
    ChainExhausted,
    FactorizationNeeded,
    InvalidInput,
    MemoryBudgetExceeded,
    ModchainError,
    NotCoprime,
    NotDivisible,
    PreconditionViolated,
    UnbalancedInapplicable,
)
from .modcore import (
    CycleShape,
    FactoredModulus,
    Residue,
    crt_combine,
    crt_ints,
    crt_pair,
    cycle_shape,
    euler_phi,
    is_determinate,
    modified_orders,
    multiplicative_order,
    pow_mod,
)
from .dlog import (
    DlogResult,
    PrimeDlog,
    dlog_prime,
    find_generator,
    log2_mod_3v,
    log3_mod_2u,
    power_membership,
    prime_context,
)
from .planner import (
    ChainValidation,
    ExtraneousWitness,
    FactorCandidate,
    HazardEntry,
    StepDiagnostics,
    construct_extraneous,
    search_factors,
    step_diagnostics,
    validate_chain,
)
from .solver import (
    ExactSolution,
    LiftPlan,
    ProblemSpec,
    Progression,
    RunReport,
    SolutionModM,
    SolverConfig,
    StepStats,
    bit_count_table,
    compute_lift_plan,
    enumerate_base_solutions,
    lift_balanced,
    lift_progression,
    lift_unbalanced,
    make_solution,
    modular_solutions,
    reduce_exponent,
    reduce_solution,
    solve_chain,
)

__version__ = "0.1.0"

__all__ = [
    "BaseModulusTooLarge",
    "Chain",
    "ChainExhausted",
    "ChainFile",
    "ChainStep",
    "ChainValidation",
    "CycleShape",
    "DlogResult",
    "ExactSolution",
    "ExtraneousWitness",
    "FactorCandidate",
    "HazardEntry",
    "FactoredModulus",
    "FactorizationNeeded",
    "InvalidInput",
    "LiftPlan",
    "MemoryBudgetExceeded",
    "ModchainError",
    "NotCoprime",
    "PreconditionViolated",
    "NotDivisible",
    "PrimeDlog",
    "ProblemSpec",
    "Progression",
    "Residue",
    "RunReport",
    "SolutionModM",
    "SolverConfig",
    "StepDiagnostics",
    "StepStats",
    "UnbalancedInapplicable",
    "bit_count_table",
    "StepOrders",
    "bundled_chain",
    "bundled_chain_text",
    "compute_lift_plan",
    "construct_extraneous",
    "crt_combine",
    "crt_ints",
    "crt_pair",
    "cycle_shape",
    "dlog_prime",
    "enumerate_base_solutions",
    "euler_phi",
    "find_generator",
    "is_determinate",
    "lift_balanced",
    "lift_progression",
    "lift_unbalanced",
    "direction_bases",
    "load_chain_file",
    "log2_mod_3v",
    "log3_mod_2u",
    "modified_orders",
    "make_solution",
    "modular_solutions",
    "reduce_exponent",
    "multiplicative_order",
    "pow_mod",
    "parse_chain_file",
    "power_membership",
    "prime_context",
    "reduce_solution",
    "search_factors",
    "solve_chain",
    "step_diagnostics",
    "validate_chain",
]
