"""Levels of the classifying diagram of finite categories."""

from ._cdiag import (
    Category,
    CdiagError,
    builtin,
    closed_form_level1,
    completeness,
    decompose,
    decompose_report_json,
    discrete,
    enumerate_profiles,
    finset_oracle,
    glnq_order,
    maximal_subgroupoid,
    nerve,
    opposite,
    parse_catdef,
    segal,
    vect_oracle,
)

__all__ = [
    "Category",
    "CdiagError",
    "builtin",
    "closed_form_level1",
    "completeness",
    "decompose",
    "decompose_report_json",
    "discrete",
    "enumerate_profiles",
    "finset_oracle",
    "glnq_order",
    "maximal_subgroupoid",
    "nerve",
    "opposite",
    "parse_catdef",
    "segal",
    "vect_oracle",
]
