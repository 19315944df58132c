"""Segment calculus and symplectic-model decisions for ladder representations of inner forms of GL_n."""
from .core import (
    ZERO,
    Indivisible,
    Line,
    MixedGrid,
    MixedLines,
    Multisegment,
    NotALadder,
    OrderedMultisegment,
    RankMismatch,
    Segment,
    SegmentError,
    is_ladder,
    jacquet_decomposition,
    kernel_components,
    linked,
    precedes,
    rank,
    seg,
    shift,
    speh_halve,
    standard_orders,
)
from .zelevinsky import mw_dual
from .symplectic import (
    GoodDecomposition,
    good_decompositions,
    has_good_decomposition,
    is_symplectic,
    verify_speh_implication,
)
from .orbits import (
    admissible_rep,
    character_exponents,
    maximal_parabolic_exponent,
    s2_of,
)
from .classify import (
    PS3,
    Complementary,
    Speh,
    Status,
    Supercuspidal,
    Verdict,
    classify_ladder_Q,
    classify_ladder_Z,
    classify_nu_pair,
    classify_single_segment,
    classify_speh,
    product_distinguished,
    unitary_family_member,
)
from .textformat import parse, to_text

__version__ = "0.1.0"
