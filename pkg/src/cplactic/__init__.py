"""Crystal, plactic and jeu de taquin tools for the symplectic type C_n."""

from .columns import (
    A1,
    A1_BAR,
    Column,
    SplitColumn,
    admissible_columns,
    contract,
    is_admissible,
    is_coadmissible,
    n_count,
    phi_inverse,
    phi_map,
    split,
    split_extended,
)
from .crystal import (
    Component,
    Word,
    e_op,
    enumerate_component,
    epsilon,
    f_op,
    highest_weight_lambda,
    is_highest_weight,
    phi_coeff,
    replay,
    same_component,
    same_position,
    signature,
    to_highest,
    weight,
)
from .errors import ComponentOverflow, CPlacticError, InvalidInput, InvariantViolation
from .insertion import Bumped, Contracted, Grew, insert_letter_column, insert_letter_tableau, p_symbol
from .kernel import BACKEND
from .plactic import congruent, elementary_rewrites, rewrite_search
from .rs import RSPair, q_symbol, rs_inverse, rs_map
from .sjdt import CornerPolicy, rectify, rectify_all_orders, sjdt_elementary, sjdt_slide, two_column_slide
from .tableaux import (
    SkewTableau,
    SymplecticTableau,
    enumerate_skew_tableaux,
    highest_weight_tableau,
    inner_corners,
    is_admissible_skew,
    is_kn_tableau,
    is_symplectic,
    outside_corners,
    split_form,
)

__version__ = "0.1.0"
