"""Exact computations in the association scheme of symmetric bilinear forms
over odd finite fields: eigenvalues, inner distributions, codes and designs,
trace constructions, bounds, and the derived Hamming-metric codes."""

__version__ = "0.1.0"

from .errors import *  # noqa: E402,F401,F403
from .gf import FieldSpec, FiniteField, default_field, default_tower, field_create, tower_create  # noqa: E402
from .symform import SymForm, RankType, rank_type, classify, all_forms, enumerate_forms, pairing  # noqa: E402
from .scheme import (  # noqa: E402
    GaussInt,
    QNumberTable,
    classes,
    krawtchouk,
    q_numbers_charsum_oracle,
    q_numbers_explicit,
    q_numbers_recurrence,
    qbinom,
    valency,
)
from .formset import FormSet  # noqa: E402
from .dist import (  # noqa: E402
    Distribution,
    abcd,
    bound_additive,
    bound_even_additive,
    bound_even_nonadditive,
    bound_odd,
    closed_form_even,
    closed_form_odd,
    distribution_from_abcd,
    dual_distribution,
    four_equations,
    inner_distribution,
    invert_distribution,
    is_d_code,
    is_t_design,
)
from .construct import ConstructionParams, additive_dual, construct_Y, puncture, verify_code_parameters  # noqa: E402
from .hamming import (  # noqa: E402
    Enumerator,
    brute_force_enumerator,
    code_C1,
    code_C2,
    enumerator_C1_formula,
    enumerator_C2_formula,
    min_distance_formulas,
    n_of_h,
)
from .lp import lp_bound, lp_certificate_check  # noqa: E402
