"""Exact Casson-Walker invariants of Dehn surgery, with applications.

* :mod:`cwsurgery.dedekind` - Dedekind sums and symbols
* :mod:`cwsurgery.casson_walker` - surgery formulas for knots and 2-component links
* :mod:`cwsurgery.obstruction` - obstructions to surgeries returning the same manifold
* :mod:`cwsurgery.cosmetic` - cosmetic crossing checks over a knot table
"""
from .arithmetic import (
    DegenerateFraction,
    Rational,
    format_rational,
    gcd_pair,
    make_rational,
    parse_rational,
    squarefree_decompose,
)
from .casson_walker import (
    NotRationalHomologySphere,
    Slope,
    TwoComponentLinkData,
    lambda_knot,
    lambda_link,
    lambda_link_breakdown,
    linking_form,
    torus_knot_a2,
    v3,
)
from .cosmetic import cosmetic_verdict, load_bundled_table, load_knot_table, reproduce_cor_ten
from .dedekind import dedekind_sum, dedekind_sum_naive, dedekind_symbol, sawtooth
from .obstruction import (
    HypothesisError,
    ObstructionInstance,
    certify_complement,
    cw_residual,
    eliminate_case,
    obstruct_slope,
    theorem_main_scan,
)

__version__ = "0.1.0"
