"""Verification reports produced by the identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    index: int
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity over an index range.

    ``lhs``/``rhs`` in a :class:`Failure` are exact decimal or fraction
    strings so big values survive serialization untouched.  ``value`` is an
    optional summary (e.g. the common per-edge count) for checks that have one.
    """

    identity: str
    range_checked: tuple[int, int]
    first_failure: Failure | None = None
    value: str | None = None
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "passed", self.first_failure is None)

    def as_dict(self) -> dict:
        lo, hi = self.range_checked
        f = self.first_failure
        return {
            "identity": self.identity,
            "range_start": lo,
            "range_end": hi,
            "passed": self.passed,
            "failure_index": None if f is None else f.index,
            "lhs": None if f is None else f.lhs,
            "rhs": None if f is None else f.rhs,
            "value": self.value,
        }


def check_range(identity, indices, lhs, rhs, value=None) -> VerificationReport:
    """Compare ``lhs(i) == rhs(i)`` for each i, stopping at the first mismatch."""
    indices = list(indices)
    if not indices:
        raise ValueError("empty index range")
    for i in indices:
        a, b = lhs(i), rhs(i)
        if a != b:
            return VerificationReport(
                identity, (indices[0], indices[-1]), Failure(i, str(a), str(b)), value
            )
    return VerificationReport(identity, (indices[0], indices[-1]), None, value)
