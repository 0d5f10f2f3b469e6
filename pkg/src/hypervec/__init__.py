"""Exact verification of set-valued scalar products and their pairings.

The package builds concrete vector-space-like structures whose scalar
multiplication returns a describable set of vectors rather than a
single one, computes the distinguished (essential) points of those
sets, and checks the algebraic laws the structures are supposed to
satisfy with exact rational arithmetic, reporting replayable
counterexamples when a law fails.
"""

from .catalog import (
    CATALOG_NOTES,
    EXPECTED_VERDICTS,
    catalog_models,
    run_catalog,
    suite_verdict,
)
from .checker import (
    CheckItem,
    CheckReport,
    MAX_WITNESSES,
    SUITE_NAMES,
    SampleConfig,
    SplitMix64,
    Witness,
    render_json,
    report_document,
    run_suites,
    sample_stream,
)
from .dsl import (
    CheckDirective,
    ModelFile,
    ModelFileError,
    format_model_file,
    parse_model_file,
)
from .essential import (
    EssentialSet,
    check_lemma_basic,
    check_normal_equivalence,
    check_strong_normal,
    check_weak_normal,
    essential_points,
)
from .inner import (
    DotProduct,
    InnerProductSpec,
    SupResult,
    UnboundedSupremumError,
    WeightedDot,
    check_hip_axioms,
    check_lemma_34,
    check_norm_props,
    check_real_ip_axioms,
    check_theorem_normal,
    norm_sq,
    pairing,
    sup_pairing,
)
from .models import (
    Family,
    FiniteSet,
    Geometric,
    GeometricRay,
    HyperSet,
    ModelError,
    ModelSpec,
    Sign,
    SignPair,
    Trivial,
    ZeroAugmented,
    check_wvs_axioms,
    contains,
    describe_set,
    enumerate_set,
    family_token,
    finite,
    hyperset_eq,
    intersect_nonempty,
    negate_set,
    product,
    product_of_set,
    ray,
    sign_pair,
    sumset,
)
from .scalars import (
    FieldTag,
    GaussianRational,
    Scalar,
    abs2,
    as_real,
    conjugate,
    format_scalar,
    leq_sqrt_product,
    parse_scalar,
)
from .vectors import (
    Vector,
    make_vector,
    parse_vector,
    unit_vector,
    vector_key,
    zero_vector,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG_NOTES",
    "CheckDirective",
    "CheckItem",
    "CheckReport",
    "DotProduct",
    "EXPECTED_VERDICTS",
    "EssentialSet",
    "Family",
    "FieldTag",
    "FiniteSet",
    "GaussianRational",
    "Geometric",
    "GeometricRay",
    "HyperSet",
    "InnerProductSpec",
    "MAX_WITNESSES",
    "ModelError",
    "ModelFile",
    "ModelFileError",
    "ModelSpec",
    "SUITE_NAMES",
    "SampleConfig",
    "Scalar",
    "Sign",
    "SignPair",
    "SplitMix64",
    "SupResult",
    "Trivial",
    "UnboundedSupremumError",
    "Vector",
    "WeightedDot",
    "Witness",
    "ZeroAugmented",
    "abs2",
    "as_real",
    "catalog_models",
    "check_hip_axioms",
    "check_lemma_34",
    "check_lemma_basic",
    "check_norm_props",
    "check_normal_equivalence",
    "check_real_ip_axioms",
    "check_strong_normal",
    "check_theorem_normal",
    "check_weak_normal",
    "check_wvs_axioms",
    "conjugate",
    "contains",
    "describe_set",
    "enumerate_set",
    "essential_points",
    "family_token",
    "finite",
    "format_model_file",
    "format_scalar",
    "hyperset_eq",
    "intersect_nonempty",
    "leq_sqrt_product",
    "make_vector",
    "negate_set",
    "norm_sq",
    "pairing",
    "parse_model_file",
    "parse_scalar",
    "parse_vector",
    "product",
    "product_of_set",
    "ray",
    "render_json",
    "report_document",
    "run_catalog",
    "run_suites",
    "sample_stream",
    "sign_pair",
    "sumset",
    "suite_verdict",
    "sup_pairing",
    "unit_vector",
    "vector_key",
    "zero_vector",
]
