"""Fixed points of augmented happy functions: oases and mirages."""

from ._core import (
    Base,
    CapacityError,
    DigitTheoremReport,
    DigitTheoremViolation,
    MaxOasisResult,
    Oasis,
    Run,
    Table1Row,
    check_digit_theorems,
    companion_increment,
    companion_reflect_second_digit,
    constant_of_fixed_point,
    construct_5_oasis,
    deficiency,
    deficiency_table,
    digits,
    eval_happy,
    fixed_points,
    has_fixed_point,
    max_oasis,
    maximal_mirage_runs,
    mirage_max_length,
    oasis_length_bound,
    oasis_scan,
    run_cli,
    search_bound,
    smallest_fixed_point,
    sum_of_digit_squares,
    table1,
    to_base_string,
    translate_oasis,
    verify_base,
    __version__,
)

__all__ = [
    "Base",
    "CapacityError",
    "DigitTheoremReport",
    "DigitTheoremViolation",
    "MaxOasisResult",
    "Oasis",
    "Run",
    "Table1Row",
    "check_digit_theorems",
    "companion_increment",
    "companion_reflect_second_digit",
    "constant_of_fixed_point",
    "construct_5_oasis",
    "deficiency",
    "deficiency_table",
    "digits",
    "eval_happy",
    "fixed_points",
    "has_fixed_point",
    "max_oasis",
    "maximal_mirage_runs",
    "mirage_max_length",
    "oasis_length_bound",
    "oasis_scan",
    "run_cli",
    "search_bound",
    "smallest_fixed_point",
    "sum_of_digit_squares",
    "table1",
    "to_base_string",
    "translate_oasis",
    "verify_base",
    "__version__",
]
