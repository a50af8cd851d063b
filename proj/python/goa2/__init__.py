"""Feasibility campaigns for deformed metrics on compact coset spaces."""

from ._goa2 import (  # noqa: F401
    ConstructionError,
    ContractError,
    FeasibilityReport,
    NotConstructedError,
    PhiDomainError,
    PhiFunction,
    PhiParseError,
    Space,
    UnknownKeyError,
    build_space,
    certify,
    list_catalog,
    run_campaign,
    summary_table,
    wallach_derived_triple,
    wallach_metric_split,
)

__all__ = [
    "ConstructionError",
    "ContractError",
    "FeasibilityReport",
    "NotConstructedError",
    "PhiDomainError",
    "PhiFunction",
    "PhiParseError",
    "Space",
    "UnknownKeyError",
    "build_space",
    "certify",
    "list_catalog",
    "run_campaign",
    "summary_table",
    "wallach_derived_triple",
    "wallach_metric_split",
]
