"""Check results and the run report that the CLI prints."""

from __future__ import annotations

import json
from abc import ABC
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Type, TypeVar

from lappoly import __version__
from lappoly.exceptions import PreconditionException
from lappoly.polynomials import DensePoly, IntPoly, RatPoly
from lappoly.utils.types import GraphDescriptor

T = TypeVar("T", bound="ReportItem")


def poly_from_strings(coefficients: Sequence[str]) -> DensePoly:
    """
    Parse descending coefficient strings back into a polynomial.

    Args:
        coefficients: Decimal integers or `p/q` rationals, leading term first.

    Returns:
        An IntPoly if every coefficient is integral, otherwise a RatPoly.
    """
    values = [Fraction(c) for c in coefficients]
    if all(v.denominator == 1 for v in values):
        return IntPoly.from_descending([int(v) for v in values])
    return RatPoly.from_descending(values)


class ReportItem(ABC):
    """Abstract class representing a serializable report item."""

    @classmethod
    def from_dict(cls: Type[T], data: Mapping[str, Any]) -> T:
        """
        Convert a dictionary to a given report object.

        Args:
            data: The dictionary to convert.

        Returns:
            The associated report object.
        """
        return cls(**data)


@dataclass
class CheckReport(ReportItem):
    """The outcome of one check on one input."""

    name: str
    passed: bool
    skipped: bool = False
    details: Dict[str, Any] = field(default_factory=dict)
    elapsed: Optional[float] = None

    @classmethod
    def skip(
        cls: Type[CheckReport], name: str, reason: PreconditionException
    ) -> CheckReport:
        """
        Record a check that does not apply to its input.

        Args:
            name: The check name.
            reason: The precondition that failed.

        Returns:
            A skipped report; skips count as passes.
        """
        return cls(name, passed=True, skipped=True, details=reason.to_dict())

    def to_dict(self: CheckReport) -> Dict[str, Any]:
        """
        Convert the report to its JSON form.

        Returns:
            The JSON-safe dictionary.
        """
        data: Dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "skipped": self.skipped,
            "details": self.details,
        }
        if self.elapsed is not None:
            data["elapsed"] = self.elapsed
        return data


@dataclass
class IdentityReport(CheckReport):
    """An exact polynomial identity: passes iff left - right is zero."""

    left: Optional[DensePoly] = None
    right: Optional[DensePoly] = None
    residual: Optional[DensePoly] = None

    @classmethod
    def compare(
        cls: Type[IdentityReport],
        name: str,
        left: DensePoly,
        right: DensePoly,
        details: Optional[Dict[str, Any]] = None,
    ) -> IdentityReport:
        """
        Compare two exact polynomials.

        Args:
            name: The identity name.
            left: The left-hand side.
            right: The right-hand side.
            details: Extra JSON-safe data.

        Returns:
            The report, with the residual left - right.
        """
        residual = left - right
        return cls(
            name,
            passed=residual.is_zero(),
            details=details or {},
            left=left,
            right=right,
            residual=residual,
        )

    @classmethod
    def from_dict(
        cls: Type[IdentityReport], data: Mapping[str, Any]
    ) -> IdentityReport:
        """
        Convert a dictionary to an IdentityReport, parsing the polynomials.

        Args:
            data: The dictionary to convert.

        Returns:
            The IdentityReport.
        """
        polys = {
            key: poly_from_strings(data[key]) for key in ("left", "right", "residual")
        }
        rest = {k: v for k, v in data.items() if k not in polys}
        return cls(**rest, **polys)

    def to_dict(self: IdentityReport) -> Dict[str, Any]:
        """
        Convert the report to its JSON form, coefficients as exact strings.

        Returns:
            The JSON-safe dictionary.
        """
        data = super().to_dict()
        for key, poly in (
            ("left", self.left),
            ("right", self.right),
            ("residual", self.residual),
        ):
            data[key] = poly.to_strings() if poly is not None else ["0"]
        return data


def check_from_dict(data: Mapping[str, Any]) -> CheckReport:
    """
    Rebuild a check report, choosing the type from the keys present.

    Args:
        data: A dictionary produced by `to_dict`.

    Returns:
        A CheckReport or IdentityReport.
    """
    if "residual" in data:
        return IdentityReport.from_dict(data)
    return CheckReport.from_dict(data)


@dataclass
class RunReport(ReportItem):
    """Everything one CLI invocation computed and checked for one graph."""

    graph: GraphDescriptor
    checks: List[CheckReport] = field(default_factory=list)
    outputs: Dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    @property
    def passed(self: RunReport) -> bool:
        """
        Whether every check passed; skipped checks count as passed.

        Returns:
            The overall verdict.
        """
        return all(check.passed for check in self.checks)

    @property
    def failures(self: RunReport) -> List[CheckReport]:
        """
        The checks that failed.

        Returns:
            The failing checks, in run order.
        """
        return [check for check in self.checks if not check.passed]

    @classmethod
    def from_dict(cls: Type[RunReport], data: Mapping[str, Any]) -> RunReport:
        """
        Convert a dictionary to a RunReport.

        Args:
            data: The dictionary to convert.

        Returns:
            The RunReport.
        """
        return cls(
            graph=data["graph"],
            checks=[check_from_dict(check) for check in data["checks"]],
            outputs=dict(data["outputs"]),
            version=data["version"],
        )

    def to_dict(self: RunReport) -> Dict[str, Any]:
        """
        Convert the report to its JSON form.

        Returns:
            The JSON-safe dictionary.
        """
        return {
            "version": self.version,
            "graph": dict(self.graph),
            "checks": [check.to_dict() for check in self.checks],
            "outputs": self.outputs,
            "passed": self.passed,
        }

    def to_json(self: RunReport) -> str:
        """
        Serialize with sorted keys and fixed separators.

        Returns:
            One line of JSON.
        """
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls: Type[RunReport], text: str) -> RunReport:
        """
        Parse a line produced by `to_json`.

        Args:
            text: The JSON text.

        Returns:
            The RunReport.
        """
        data = json.loads(text)
        data.pop("passed", None)
        return cls.from_dict(data)
