"""Exact verification of the construction of a weight-2 semi-cusp form
congruent to an Eisenstein series modulo a prime above an irregular prime."""

from .arith import (
    CyclotomicNumber,
    PadicNum,
    cyclo_arith,
    embed_rational,
    padic_arith,
    primitive_root,
    teichmuller,
)
from .bernoulli import (
    IrregularPair,
    bernoulli_number,
    bernoulli_polynomial,
    irregular_indices,
    is_irregular_pair,
    power_sum,
    scan_irregular,
    verify_power_sum_congruence,
)
from .characters import (
    ClassNumberReport,
    DirichletCharacter,
    carlitz_check,
    char_value,
    generalized_bernoulli,
    l_value,
    relative_class_number,
)
from .eisenstein import (
    build_unit_constant_form,
    eis_G1_char,
    eis_G2_char,
    eis_G2_level_p,
    eis_Gk_level1,
    eis_s2_char,
    embedded_Gk,
)
from .hecke import diamond, hecke_Tl, hecke_Tn, is_eigen_mod
from .pipeline import PipelineReport, distinguish_from_s2, ribet_construct
from .qseries import QExpansion, qexp_congruent_mod, qexp_linear, qexp_mul

__version__ = "0.1.0"
