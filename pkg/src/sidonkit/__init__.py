"""Dense Sidon sets over finite fields and the exact counts they control."""

__version__ = "0.1.0"

from .counting import (
    CountReport,
    DiscrepancyReport,
    IntersectionReport,
    RepFunction,
    TranslationReport,
    discrepancy,
    identity_check,
    intersection_report,
    pair_count,
    productset,
    rep_function,
    sumset,
    theta_report,
    translation_lemma_check,
)
from .ff_core import (
    AmbientGroup,
    CyclicZ,
    FieldAdditive,
    FieldElement,
    FieldSpec,
    GroupElement,
    Polynomial,
    discrete_log,
    field_arith,
    field_create,
    find_generator,
    group_create,
    group_enumerate,
    group_op,
)
from .sidon import (
    SidonSet,
    SidonVerdict,
    construct_golomb,
    construct_parabolic,
    construct_welch,
    explicit_set,
    sidon_delta,
    verify_sidon,
)
