"""Brute-force labeled-tree enumeration, used as independent ground truth.

Every (n-1)-subset of the edges of K_n is tested for connectivity.  Nothing
here relies on a counting formula (no Pruefer codes, no matrix-tree theorem):
the oracle is deliberately dumb so that it can check the clever code.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import DomainError
from .report import Failure, VerificationReport

MAX_N = 8

Edge = tuple[int, int]


@dataclass(frozen=True)
class LabeledTree:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(_canonical_edge(u, v, self.n) for u, v in self.edges))
        object.__setattr__(self, "edges", edges)
        if not is_tree(self.n, edges):
            raise DomainError(f"not a tree on {self.n} vertices: {edges}")


@dataclass(frozen=True)
class SplitProfile:
    n: int
    anchor_edge: Edge
    counts_by_k: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts_by_k)


def _canonical_edge(u: int, v: int, n: int) -> Edge:
    if u == v:
        raise DomainError(f"self-loop at vertex {u}")
    if not (1 <= u <= n and 1 <= v <= n):
        raise DomainError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
    return (u, v) if u < v else (v, u)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def is_tree(n: int, edges) -> bool:
    """True iff ``edges`` has n-1 members and connects vertices 1..n."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    edges = [_canonical_edge(u, v, n) for u, v in edges]
    if len(set(edges)) != len(edges):
        raise DomainError("duplicate edge")
    if len(edges) != n - 1:
        return False
    parent = list(range(n + 1))
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            return False
        parent[ru] = rv
    # n-1 merges without a cycle leaves exactly one component
    return True


def _check_n(n: int, lo: int) -> None:
    if not lo <= n <= MAX_N:
        raise DomainError(f"oracle supports {lo} <= n <= {MAX_N}, got {n}")


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[LabeledTree, ...]:
    all_edges = list(combinations(range(1, n + 1), 2))
    trees = []
    for subset in combinations(all_edges, n - 1):
        if is_tree(n, subset):
            # bypass __post_init__ re-validation; subset is already canonical
            t = object.__new__(LabeledTree)
            object.__setattr__(t, "n", n)
            object.__setattr__(t, "edges", subset)
            trees.append(t)
    return tuple(trees)


def enumerate_labeled_trees(n: int) -> tuple[LabeledTree, ...]:
    """All labeled trees on 1..n in lexicographic edge-list order (n <= 8)."""
    _check_n(n, 1)
    return _enumerate(n)


def count_trees_with_edge(n: int, u: int, v: int) -> int:
    _check_n(n, 2)
    if not 1 <= u < v <= n:
        raise DomainError(f"need 1 <= u < v <= {n}, got ({u}, {v})")
    return sum(1 for t in _enumerate(n) if (u, v) in t.edges)


def edge_counts(n: int) -> dict[Edge, int]:
    """Number of trees containing each edge of K_n, in one pass."""
    _check_n(n, 2)
    counts = Counter({e: 0 for e in combinations(range(1, n + 1), 2)})
    for t in _enumerate(n):
        counts.update(t.edges)
    return dict(counts)


def edge_count_uniformity(n: int) -> VerificationReport:
    """Check every edge of K_n lies in the same number of trees."""
    counts = edge_counts(n)
    items = sorted(counts.items())
    first_edge, common = items[0]
    for e, c in items[1:]:
        if c != common:
            return VerificationReport(
                "edge-uniformity",
                (n, n),
                Failure(n, f"{first_edge}:{common}", f"{e}:{c}"),
            )
    return VerificationReport("edge-uniformity", (n, n), None, str(common))


def _component(n: int, edges, start: int) -> set[int]:
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def split_profile(n: int) -> SplitProfile:
    """Tally trees containing {1,2} by how many of 3..n sit on vertex 1's side."""
    _check_n(n, 2)
    anchor = (1, 2)
    counts = [0] * (n - 1)
    for t in _enumerate(n):
        if anchor in t.edges:
            rest = [e for e in t.edges if e != anchor]
            counts[len(_component(n, rest, 1)) - 1] += 1
    return SplitProfile(n, anchor, tuple(counts))
