"""Self-dual binary codes, their shadows, and weight-enumerator families."""

from sdcodes.gf2core import (
    BitMatrix,
    BitVector,
    CosetSplit,
    LinearCode,
    ParityClass,
    ParseError,
    ShadowCoset,
    code_from_json,
    code_to_json,
    concat,
    coset_split,
    doubly_even_subcode,
    dual,
    dumps_code,
    load_code,
    loads_code,
    parity_class,
    rains_bound,
    save_code,
    shadow,
)
from sdcodes.minweight import (
    SearchBudget,
    WeightDistribution,
    brute_force_coset_wef,
    brute_force_wef,
    coset_min_weight,
    count_coset_upto,
    count_words_upto,
    min_weight,
)
from sdcodes.wefsym import (
    CongruenceSystem,
    Constraint,
    Family,
    GleasonCoeffs,
    InconsistentConstraints,
    InfeasibleCase,
    LinearForm,
    ParamPoly,
    RationalPoly,
    SHADOW_CASES,
    apply_shadow_case,
    c1_basis,
    derive_parity,
    display_cutoffs,
    family_for,
    family_to_json,
    feasible_range,
    gleason_expand,
    shadow_transform,
    w1_family,
)
from sdcodes.constructions import (
    B80_FIRST_ROW,
    CirculantSpec,
    FAMILY_CASES,
    NeighborSpec,
    X80_SUPPORT,
    bordered_double_circulant,
    build_b80,
    build_c82,
    neighbor,
    neighbor_counts,
    neighbor_parameters,
    table1,
    table1_from_file,
    tsai_extend,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "CosetSplit",
    "LinearCode",
    "ParityClass",
    "ParseError",
    "ShadowCoset",
    "code_from_json",
    "code_to_json",
    "concat",
    "coset_split",
    "doubly_even_subcode",
    "dual",
    "dumps_code",
    "load_code",
    "loads_code",
    "parity_class",
    "rains_bound",
    "save_code",
    "shadow",
    "SearchBudget",
    "WeightDistribution",
    "brute_force_coset_wef",
    "brute_force_wef",
    "coset_min_weight",
    "count_coset_upto",
    "count_words_upto",
    "min_weight",
    "CongruenceSystem",
    "Constraint",
    "Family",
    "GleasonCoeffs",
    "InconsistentConstraints",
    "InfeasibleCase",
    "LinearForm",
    "ParamPoly",
    "RationalPoly",
    "SHADOW_CASES",
    "apply_shadow_case",
    "c1_basis",
    "derive_parity",
    "display_cutoffs",
    "family_for",
    "family_to_json",
    "feasible_range",
    "gleason_expand",
    "shadow_transform",
    "w1_family",
    "B80_FIRST_ROW",
    "CirculantSpec",
    "FAMILY_CASES",
    "NeighborSpec",
    "X80_SUPPORT",
    "bordered_double_circulant",
    "build_b80",
    "build_c82",
    "neighbor",
    "neighbor_counts",
    "neighbor_parameters",
    "table1",
    "table1_from_file",
    "tsai_extend",
    "__version__",
]
