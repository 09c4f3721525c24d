"""Base schema definitions for verification reports.

This module defines the result of a single verified statement and the report
a subcommand writes, in the JSON layout consumed by downstream tooling.
"""

import math

from pydantic import BaseModel, ConfigDict, Field, JsonValue

from eqgirth.conf.global_settings import RunConfig

REPORT_SCHEMA = 1


class CheckResult(BaseModel):
    """Outcome of one verified statement.

    Attributes:
        name: Short identifier of the statement.
        value: The computed value.
        expected: The value the statement predicts (None for recorded-only results).
        tolerance: Allowed absolute deviation from ``expected``.
        passed: Whether the statement holds; serialized as ``pass``.
        claim: The statement in plain language.
        error: Message of the error that aborted the computation, if any.
    """
    model_config = ConfigDict(populate_by_name=True)

    name: str
    value: JsonValue = None
    expected: JsonValue = None
    tolerance: float | None = None
    passed: bool = Field(alias="pass")
    claim: str
    error: str | None = None

    @classmethod
    def compare(cls, name: str, value: float | int, expected: float | int, claim: str, tolerance: float | None = None) -> "CheckResult":
        """Result asserting ``value`` equals ``expected`` (within ``tolerance`` if given).

        Examples:
            >>> CheckResult.compare("half", 0.5, 0.5, "rotation by pi").passed
            True
        """
        if tolerance is None:
            passed = value == expected
        else:
            passed = math.isfinite(value) and abs(value - expected) <= tolerance
        return cls(name=name, value=value, expected=expected, tolerance=tolerance, passed=passed, claim=claim)

    @classmethod
    def at_most(cls, name: str, value: float, bound: float, claim: str, tolerance: float = 0.0) -> "CheckResult":
        """Result asserting ``value ≤ bound + tolerance``."""
        return cls(
            name=name,
            value=value,
            expected=bound,
            tolerance=tolerance,
            passed=value <= bound + tolerance,
            claim=claim,
        )

    @classmethod
    def recorded(cls, name: str, value: JsonValue, claim: str) -> "CheckResult":
        """Result that only records a value without asserting anything about it."""
        return cls(name=name, value=value, passed=True, claim=claim)


class Report(BaseModel):
    """Report written by one subcommand.

    Attributes:
        schema_version: Version of the report layout; serialized as ``schema``.
        subcommand: The subcommand that produced the report.
        config: The run configuration.
        results: One entry per verified statement.
        wall_time_ms: Wall time of the run, or None when timing is not recorded.
    """
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=REPORT_SCHEMA, alias="schema")
    subcommand: str
    config: RunConfig
    results: list[CheckResult]
    wall_time_ms: float | None = None

    @property
    def passed(self) -> bool:
        """Whether every result passed."""
        return all(result.passed for result in self.results)
