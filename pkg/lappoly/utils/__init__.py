"""Util constants and types for lappoly."""

from lappoly.utils.config import (
    ALL_N_LIMIT,
    DEFAULT_TOL,
    MAX_ENUMERATION_ORDER,
    MAX_GRAPH6_ORDER,
    ROOT_TOL,
    SUBSET_SWEEP_LIMIT,
    TOL_ENV_VAR,
)
from lappoly.utils.types import GraphDescriptor, PolyOutput, RootListData

__all__ = [
    "ALL_N_LIMIT",
    "DEFAULT_TOL",
    "MAX_ENUMERATION_ORDER",
    "MAX_GRAPH6_ORDER",
    "ROOT_TOL",
    "SUBSET_SWEEP_LIMIT",
    "TOL_ENV_VAR",
    "GraphDescriptor",
    "PolyOutput",
    "RootListData",
]
