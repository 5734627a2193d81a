"""Finite logical-matrix semantics for many-valued propositional logics,
a paraconsistent consequence transform, and a metalogic property auditor."""

from .formula import (
    And,
    Formula,
    FormulaSet,
    Imp,
    Letter,
    Neg,
    Or,
    ParseError,
    depth,
    enumerate_formulas,
    letters,
    parse,
    random_formula,
    render,
)
from .matrix import (
    BUILTIN_NAMES,
    Matrix,
    MatrixError,
    Value,
    builtin,
    format_value,
    goedel,
    has_star_property,
    load_matrix,
    load_matrix_file,
    load_shipped,
    lukasiewicz,
    matrix_to_document,
    parse_value,
)
from .semantics import (
    Classification,
    EntailmentResult,
    EvaluationError,
    Valuation,
    classify,
    entails,
    evaluate,
    is_consistent,
    models,
    tautology_free_check,
    valuations,
)
from .para import (
    DEFAULT_SUBSET_BOUND,
    LogicSpec,
    ParaResult,
    SubsetBoundError,
    consistent_subsets,
    is_para_consistent,
    logic_entails,
    maximal_consistent_subsets,
    para_entails,
)
from .audit import (
    AuditBudget,
    AuditReport,
    Method,
    Outcome,
    PropertyId,
    Verdict,
    check_property,
    replay_claims,
    run_table,
    verify_witness_suite,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "AuditBudget",
    "AuditReport",
    "BUILTIN_NAMES",
    "Classification",
    "DEFAULT_SUBSET_BOUND",
    "EntailmentResult",
    "EvaluationError",
    "Formula",
    "FormulaSet",
    "Imp",
    "Letter",
    "LogicSpec",
    "Matrix",
    "MatrixError",
    "Method",
    "Neg",
    "Or",
    "Outcome",
    "ParaResult",
    "ParseError",
    "PropertyId",
    "SubsetBoundError",
    "Valuation",
    "Value",
    "Verdict",
    "builtin",
    "check_property",
    "classify",
    "consistent_subsets",
    "depth",
    "entails",
    "enumerate_formulas",
    "evaluate",
    "format_value",
    "goedel",
    "has_star_property",
    "is_consistent",
    "is_para_consistent",
    "letters",
    "load_matrix",
    "load_matrix_file",
    "load_shipped",
    "logic_entails",
    "lukasiewicz",
    "matrix_to_document",
    "maximal_consistent_subsets",
    "models",
    "para_entails",
    "parse",
    "parse_value",
    "random_formula",
    "render",
    "replay_claims",
    "run_table",
    "tautology_free_check",
    "valuations",
    "verify_witness_suite",
]
