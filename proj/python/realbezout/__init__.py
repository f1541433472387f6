"""Exact polynomial arithmetic, real Bezout-type bounds and component counting."""

from ._core import (
    ParseError,
    Polynomial,
    Profile,
    ScheduleError,
    build_approx_tuples,
    build_FJ,
    count_components,
    def_poly,
    default_zeta,
    enumerate_admissible,
    f_factor,
    format_system,
    gen_example11,
    gen_example15,
    generic_positive,
    lemma56_ratio,
    lemma58_card,
    parse_system,
    perturb_simple_zero_check,
    sign_census,
    theorem12_bound,
    theorem16_bound,
    theorem18_bound,
)

__all__ = [
    "ParseError",
    "Polynomial",
    "Profile",
    "ScheduleError",
    "build_approx_tuples",
    "build_FJ",
    "count_components",
    "def_poly",
    "default_zeta",
    "enumerate_admissible",
    "f_factor",
    "format_system",
    "gen_example11",
    "gen_example15",
    "generic_positive",
    "lemma56_ratio",
    "lemma58_card",
    "parse_system",
    "perturb_simple_zero_check",
    "sign_census",
    "theorem12_bound",
    "theorem16_bound",
    "theorem18_bound",
]
