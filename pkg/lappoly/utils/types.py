"""Helper types."""

from typing import List, Optional, TypedDict

from typing_extensions import NotRequired


class GraphDescriptor(TypedDict):
    """Helper type for the input graph recorded in a report."""

    source: str
    graph6: Optional[str]
    n: int
    m: int


class RootData(TypedDict):
    """Helper type for one serialized root."""

    value: float
    multiplicity: int


class RootListData(TypedDict):
    """Helper type for a serialized root list."""

    error_bound: float
    roots: List[RootData]


class PolyOutput(TypedDict):
    """Helper type for a computed polynomial in a report."""

    coefficients: List[str]
    roots: NotRequired[RootListData]
