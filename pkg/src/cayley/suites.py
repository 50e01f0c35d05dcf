"""Named verification suites, each returning a list of reports.

A suite takes an upper bound (``max_n`` or a series order) and an optional
:class:`TreeCountTable`.  Passing a table lets callers check values they did
not compute here, including deliberately corrupted ones.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import oracle
from .errors import DomainError
from .recurrence import TreeCountTable, edge_rooted_count, edge_rooted_summands, tree_count_closed
from .report import Failure, VerificationReport, check_range
from .series import RESIDUALS, FormalSeries, first_nonzero, lagrange_invert, series_exp, tree_egf

SERIES_MAX_ORDER = 200

DEFAULT_BOUNDS = {
    "closed-form": 200,
    "edge-symmetry": 200,
    "oracle": 7,
    "split": 7,
    "series": 30,
}


def _ensure(table: TreeCountTable | None, n: int) -> TreeCountTable:
    if table is None:
        return TreeCountTable(n)
    if n not in table:
        table.extend(n)
    return table


def closed_form(max_n: int, table: TreeCountTable | None = None) -> list[VerificationReport]:
    table = _ensure(table, max_n)
    return [check_range("closed-form", range(1, max_n + 1), table.__getitem__, tree_count_closed)]


def edge_symmetry(max_n: int, table: TreeCountTable | None = None) -> list[VerificationReport]:
    if max_n < 2:
        raise DomainError("edge-symmetry needs max >= 2")
    table = _ensure(table, max_n)
    return [
        check_range(
            "edge-symmetry",
            range(2, max_n + 1),
            lambda n: n * edge_rooted_count(n, table),
            lambda n: 2 * table[n],
        )
    ]


def oracle_suite(max_n: int, table: TreeCountTable | None = None) -> list[VerificationReport]:
    """Enumeration counts against the table and closed form; edge counts against E_n."""
    if not 1 <= max_n <= oracle.MAX_N:
        raise DomainError(f"oracle suite needs 1 <= max <= {oracle.MAX_N}")
    table = _ensure(table, max_n)
    size = lambda n: len(oracle.enumerate_labeled_trees(n))
    reports = [
        check_range("oracle-count", range(1, max_n + 1), size, table.__getitem__,
                    value=",".join(str(size(n)) for n in range(1, max_n + 1))),
        check_range("oracle-closed-form", range(1, max_n + 1), size, tree_count_closed),
    ]
    if max_n >= 2:
        ns = range(2, max_n + 1)
        reports.append(
            check_range("oracle-edge-count", ns,
                        lambda n: oracle.count_trees_with_edge(n, 1, 2),
                        lambda n: edge_rooted_count(n, table))
        )
        reports.append(_uniformity(ns))
        reports.append(
            check_range("edge-double-count", ns,
                        lambda n: sum(oracle.edge_counts(n).values()),
                        lambda n: (n - 1) * table[n])
        )
    return reports


def _uniformity(ns) -> VerificationReport:
    for n in ns:
        r = oracle.edge_count_uniformity(n)
        if not r.passed:
            return VerificationReport("edge-uniformity", (ns[0], ns[-1]), r.first_failure)
    return VerificationReport("edge-uniformity", (ns[0], ns[-1]))


def split(max_n: int, table: TreeCountTable | None = None) -> list[VerificationReport]:
    """Per-summand check of the edge-rooted decomposition against the oracle."""
    if not 2 <= max_n <= oracle.MAX_N:
        raise DomainError(f"split suite needs 2 <= max <= {oracle.MAX_N}")
    table = _ensure(table, max_n)
    for n in range(2, max_n + 1):
        got = oracle.split_profile(n).counts_by_k
        want = edge_rooted_summands(n, table)
        if list(got) != want:
            k = next(i for i, (a, b) in enumerate(zip(got, want)) if a != b)
            return [VerificationReport(
                "split", (2, max_n), Failure(n, f"k={k}:{got[k]}", f"k={k}:{want[k]}"))]
    return [VerificationReport("split", (2, max_n))]


def series_suite(order: int, table: TreeCountTable | None = None) -> list[VerificationReport]:
    """Residuals of the tree EGF plus the Lagrange-inversion coefficient match."""
    if not 1 <= order <= SERIES_MAX_ORDER:
        raise DomainError(f"series order must be in 1..{SERIES_MAX_ORDER}")
    table = _ensure(table, order)
    egf = tree_egf(order, table)
    reports = []
    for name, fn in RESIDUALS.items():
        res = fn(egf, table)
        i = first_nonzero(res)
        fail = None if i is None else Failure(i, str(res[i]), "0")
        reports.append(VerificationReport(f"residual-{name}", (0, res.order), fail))
    lag = lagrange_invert(series_exp(FormalSeries.variable(order)), order)
    ns = range(1, order + 1)
    reports.append(check_range("lagrange-vs-egf", ns, lag.__getitem__, egf.__getitem__))
    reports.append(
        check_range("lagrange-closed-form", ns, lag.__getitem__,
                    lambda n: Fraction(n ** (n - 1), math.factorial(n)))
    )
    return reports


SUITES = {
    "closed-form": closed_form,
    "edge-symmetry": edge_symmetry,
    "oracle": oracle_suite,
    "split": split,
    "series": series_suite,
}
