"""Workbench for the natural-join / inner-union lattice of finite relations."""

from .universe import (
    ConstantKind,
    DEFAULT_FD_READING,
    FdReading,
    CapacityError,
    LatticeError,
    Relation,
    RelationError,
    Universe,
    UniverseError,
    complement,
    constant,
    cylindrify,
    fd,
    inclusion_dep,
    inner_join,
    inner_join_pointfree,
    inner_union,
    leq,
    natural_join,
    outer_union,
    outer_union_pointfree,
    project,
)
from .terms import (
    Bin,
    Const,
    Eq,
    Imp,
    Lit,
    Lt,
    MixedOperatorError,
    Ne,
    Neg,
    Or,
    ParseError,
    Var,
    format_relation,
    format_statement,
    format_term,
    free_variables,
    parse_goal,
    parse_statement,
    parse_statement_file,
    parse_term,
)
from .checker import (
    CheckReport,
    EnumerationBudgetError,
    EvaluationError,
    Exhaustive,
    Sample,
    Verdict,
    check,
    count_relations,
    enumerate_relations,
    evaluate,
)
from .models import (
    FiniteModel,
    ModelError,
    ModelSearchError,
    SearchOutcome,
    find_counterexample,
    format_model,
    load_model,
    model_from_universe,
    parse_model,
    pretty_model,
    refutes,
    search_model,
    verify_model,
)
from .suites import (
    FdDiscrimination,
    SuiteEntry,
    SuiteReport,
    UnknownSuiteError,
    discriminate_fd_reading,
    export_suites,
    fd_law_texts,
    minimal_axioms,
    run_suite,
    standard_universes,
    suite_catalog,
)

__version__ = "0.1.0"
