"""Special coverings of paired set decompositions and their equivalence with CNF satisfiability."""
from .codec import ParseError, measure_length, parse_cnf, parse_decomp, serialize_cnf, serialize_decomp
from .core import (
    FIRST,
    SECOND,
    BlockPair,
    CnfFormula,
    Decomposition,
    DecompositionError,
    FormulaError,
    InferenceOutcome,
    Violation,
    check_p1,
    find_violation,
    i_transform,
    infer_forced,
    is_covering,
    normalize_to_alpha,
    p_transform,
    validate_decomposition,
)
from .reduce import ReductionOutput, r1_total, r2_total, t1_forward, t2_backward
from .solve import (
    GuardLimitError,
    SolveResult,
    cover_bruteforce,
    cover_inferred,
    covering_to_assignment,
    sat_dpll,
    sat_truthtable,
)

__version__ = "0.1.0"
