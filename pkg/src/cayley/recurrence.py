"""Exact labeled-tree counts from the edge-rooted recurrence.

T_1 = 1 and, for n >= 2,

    E_n = sum_{k=0}^{n-2} C(n-2, k) * T_{k+1} * T_{n-k-1}
    T_n = n * E_n / 2

where E_n counts the trees containing one fixed edge.  Everything stays in
Python ints; the halving is done last and its exactness is asserted.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Iterable

from .errors import DomainError, InvariantViolation
from .report import VerificationReport, check_range


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); returns 0 when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial needs n, k >= 0, got ({n}, {k})")
    return math.comb(n, k)


class TreeCountTable:
    """Memoized T_1..T_max_n.

    The table grows on demand through :meth:`extend`.  Extension holds a lock,
    so concurrent readers only ever see a fully written prefix.
    """

    def __init__(self, max_n: int = 1):
        self._values = [0, 1]  # index 0 unused so values[n] is T_n
        self._lock = threading.Lock()
        self.extend(max_n)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "TreeCountTable":
        """Build a table from explicit T_1, T_2, ... without checking them.

        Meant for loading or for deliberately corrupted fixtures; the verify
        suites are what decide whether the values are right.
        """
        values = [int(v) for v in values]
        if not values:
            raise DomainError("need at least T_1")
        table = cls.__new__(cls)
        table._values = [0, *values]
        table._lock = threading.Lock()
        return table

    @property
    def max_n(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple[int, ...]:
        """T_1..T_max_n."""
        return tuple(self._values[1:])

    def __len__(self) -> int:
        return self.max_n

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise DomainError(f"T_{n} not in table (covers 1..{self.max_n})")
        return self._values[n]

    def __contains__(self, n: object) -> bool:
        return isinstance(n, int) and 1 <= n <= self.max_n

    def extend(self, n: int) -> None:
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        with self._lock:
            vals = self._values
            for m in range(len(vals), n + 1):
                twice = m * _edge_rooted_sum(vals, m)
                if twice % 2:
                    raise InvariantViolation(f"n * E_n odd at n={m}: {twice}")
                vals.append(twice // 2)

    def __repr__(self) -> str:
        return f"TreeCountTable(max_n={self.max_n})"


def _edge_rooted_sum(vals: list[int], n: int) -> int:
    m = n - 2
    return sum(math.comb(m, k) * vals[k + 1] * vals[n - k - 1] for k in range(m + 1))


def tree_count_recursive(n: int, table: TreeCountTable | None = None) -> int:
    """T_n via the recurrence, extending ``table`` up to n if needed."""
    if n < 1:
        raise DomainError(f"T_n is defined for n >= 1, got {n}")
    if table is None:
        table = TreeCountTable()
    if n not in table:
        table.extend(n)
    return table[n]


def tree_count_closed(n: int) -> int:
    """n^(n-2), with the single-vertex tree counted as 1."""
    if n < 1:
        raise DomainError(f"T_n is defined for n >= 1, got {n}")
    if n == 1:
        return 1
    return n ** (n - 2)


def edge_rooted_summands(n: int, table: TreeCountTable) -> list[int]:
    """The k = 0..n-2 terms C(n-2,k) T_{k+1} T_{n-k-1} of E_n."""
    if n < 2:
        raise DomainError(f"E_n is defined for n >= 2, got {n}")
    if n - 1 not in table:
        table.extend(n - 1)
    return [binomial(n - 2, k) * table[k + 1] * table[n - k - 1] for k in range(n - 1)]


def edge_rooted_count(n: int, table: TreeCountTable | None = None) -> int:
    """E_n: labeled trees on n vertices that contain one fixed edge."""
    if table is None:
        table = TreeCountTable()
    return sum(edge_rooted_summands(n, table))


def verify_edge_symmetry(n: int, table: TreeCountTable | None = None) -> VerificationReport:
    """Check n * E_n == 2 * T_n at a single n."""
    if n < 2:
        raise DomainError(f"edge symmetry is stated for n >= 2, got {n}")
    if table is None:
        table = TreeCountTable()
    if n not in table:
        table.extend(n)
    return check_range(
        "edge-symmetry",
        [n],
        lambda m: m * edge_rooted_count(m, table),
        lambda m: 2 * table[m],
    )
