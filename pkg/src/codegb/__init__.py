"""Groebner, Graver and universal bases of linear-code ideals over GF(p^r)."""

from .binomials import (
    GENERALIZED,
    ORDINARY,
    Binomial,
    BinomialSet,
    Block,
    DimensionMismatchError,
    VariableSpace,
    build_generalized_generators,
    build_ordinary_generators,
    field_relations_Iq,
    generalized_space,
    initial_form,
    ordinary_space,
    split_pos_neg,
    substitute_ones,
    word_of_binomial,
)
from .codes import LinearCode, MissingGeneratorError
from .fields import (
    DependentBasisError,
    FieldElement,
    FiniteField,
    NonPrimeError,
    NonPrimitiveModulusError,
)
from .graver import (
    GraverBasis,
    SearchSpaceTooLargeError,
    graver_bruteforce,
    graver_generalized,
    graver_ordinary,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    reduce,
    saturate_all,
    saturate_variable,
)
from .matrices import (
    IntMatrix,
    build_He,
    build_Hplus_e,
    extend_with_pI,
    hstack,
    lawrence_lift,
    vstack,
)
from .orders import (
    GradedRevlexOrder,
    LexOrder,
    MonomialOrder,
    WeightOrder,
    degrevlex,
    lex,
    weight_order,
)
from .toric import LatticeBasis, kernel_basis, toric_ideal
from .universal import (
    ConeSystem,
    UniversalBasis,
    WrongKindOrCharacteristicError,
    cone_is_empty,
    cone_rows,
    prune_by_lemma,
    universal_basis,
    universal_basis_char2,
)

__version__ = "0.1.0"

__all__ = [
    "Binomial",
    "BinomialSet",
    "Block",
    "ConeSystem",
    "DependentBasisError",
    "DimensionMismatchError",
    "FieldElement",
    "FiniteField",
    "GENERALIZED",
    "GradedRevlexOrder",
    "GraverBasis",
    "GroebnerBasis",
    "IntMatrix",
    "LatticeBasis",
    "LexOrder",
    "LinearCode",
    "MissingGeneratorError",
    "MonomialOrder",
    "NonPrimeError",
    "NonPrimitiveModulusError",
    "ORDINARY",
    "SearchSpaceTooLargeError",
    "UniversalBasis",
    "VariableSpace",
    "WeightOrder",
    "WrongKindOrCharacteristicError",
    "buchberger",
    "build_He",
    "build_Hplus_e",
    "build_generalized_generators",
    "build_ordinary_generators",
    "cone_is_empty",
    "cone_rows",
    "degrevlex",
    "extend_with_pI",
    "field_relations_Iq",
    "generalized_space",
    "graver_bruteforce",
    "graver_generalized",
    "graver_ordinary",
    "hstack",
    "initial_form",
    "kernel_basis",
    "lawrence_lift",
    "lex",
    "ordinary_space",
    "prune_by_lemma",
    "reduce",
    "saturate_all",
    "saturate_variable",
    "split_pos_neg",
    "substitute_ones",
    "toric_ideal",
    "universal_basis",
    "universal_basis_char2",
    "vstack",
    "weight_order",
    "word_of_binomial",
]
