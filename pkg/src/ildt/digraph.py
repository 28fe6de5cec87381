"""Directed graphs with bidirectional-arc awareness.

Nodes are the dense integer range ``0..n-1``. A pair of opposite arcs
``(x, y), (y, x)`` is a *bidirectional arc*: it contributes 2 to the arc
count ``e`` and 1 to the bidirectional count ``b``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceededError, InvalidGraphError

Arc = tuple[int, int]


class ArcKind(enum.Enum):
    ONE_WAY = "one-way"
    BIDIRECTIONAL = "bidirectional"


@dataclass(frozen=True)
class BasicCounts:
    """Node count ``n``, arc count ``e`` and bidirectional-pair count ``b``."""

    n: int
    e: int
    b: int

    def as_dict(self) -> dict[str, int]:
        return {"n": self.n, "e": self.e, "b": self.b}


@dataclass(frozen=True, eq=False)
class Digraph:
    """Immutable simple digraph on nodes ``0..n-1``.

    Out- and in-neighbourhoods are both stored as sorted tuples. Build
    instances with :func:`make_digraph` (or :meth:`from_successors` when the
    neighbourhoods are already known to be valid).
    """

    n: int
    succ: tuple[tuple[int, ...], ...]
    pred: tuple[tuple[int, ...], ...] = field(repr=False)
    _succ_sets: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @classmethod
    def from_successors(cls, succ: Sequence[Iterable[int]]) -> "Digraph":
        n = len(succ)
        out = tuple(tuple(sorted(set(s))) for s in succ)
        preds: list[list[int]] = [[] for _ in range(n)]
        for u, targets in enumerate(out):
            for v in targets:
                preds[v].append(u)
        # u ascends in the loop above, so every in-list is already sorted
        return cls(n, out, tuple(tuple(p) for p in preds), tuple(frozenset(s) for s in out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.succ == other.succ

    def __hash__(self) -> int:
        return hash((self.n, self.succ))

    def __len__(self) -> int:
        return self.n

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._succ_sets[u]

    def arcs(self) -> Iterator[Arc]:
        """Arcs in lexicographic order."""
        for u, targets in enumerate(self.succ):
            for v in targets:
                yield (u, v)

    def arc_kind(self, u: int, v: int) -> ArcKind:
        if not self.has_arc(u, v):
            raise KeyError((u, v))
        return ArcKind.BIDIRECTIONAL if self.has_arc(v, u) else ArcKind.ONE_WAY

    def is_bidirectional(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) and self.has_arc(v, u)

    @property
    def num_arcs(self) -> int:
        return sum(len(s) for s in self.succ)

    def neighbors(self, u: int) -> frozenset[int]:
        """Nodes joined to ``u`` by an arc in either direction."""
        return self._succ_sets[u].union(self.pred[u])

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, targets in enumerate(self.succ):
            a[u, list(targets)] = 1
        return a

    def induced(self, nodes: Sequence[int]) -> "Digraph":
        """Subgraph induced by ``nodes``, relabelled by position in ``nodes``."""
        index = {x: i for i, x in enumerate(nodes)}
        return Digraph.from_successors(
            [[index[v] for v in self.succ[x] if v in index] for x in nodes]
        )


def make_digraph(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    """Build a digraph on ``n`` nodes, deduplicating ``arcs``.

    Raises InvalidGraphError on out-of-range endpoints or self-loops.
    """
    if n < 0:
        raise InvalidGraphError(f"node count must be non-negative, got {n}")
    succ: list[set[int]] = [set() for _ in range(n)]
    for arc in arcs:
        u, v = (int(x) for x in arc)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise InvalidGraphError(f"self-loop at node {u}")
        succ[u].add(v)
    return Digraph.from_successors(succ)


def count_basic(g: Digraph) -> BasicCounts:
    e = 0
    both = 0
    for u, targets in enumerate(g.succ):
        e += len(targets)
        both += sum(1 for v in targets if g.has_arc(v, u))
    return BasicCounts(g.n, e, both // 2)


def _reaches(g: Digraph, sources: Iterable[int], target: int, banned: int) -> list[int] | None:
    """BFS path from any of ``sources`` to ``target`` avoiding ``banned``."""
    parent: dict[int, int | None] = {}
    queue: deque[int] = deque()
    for s in sources:
        if s not in parent:
            parent[s] = None
            queue.append(s)
    while queue:
        x = queue.popleft()
        if x == target:
            path = [x]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for y in g.succ[x]:
            if y != banned and y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def find_oriented_cycle(
    g: Digraph, require_one_way: bool = True, max_arcs: int = 1_000_000
) -> tuple[int, ...] | None:
    """Return a directed cycle on at least 3 distinct nodes, or None.

    Bidirected pairs may be used in one direction, and ``u -> v -> u`` never
    qualifies. With ``require_one_way`` (the default) the cycle must also use
    at least one non-reciprocated arc, matching the rule that a triangle made
    only of bidirectional arcs is not a directed 3-cycle. Without it, any
    simple cycle of length >= 3 counts.

    Arcs ``(u, v)`` are tried in lexicographic order; the witness starts with
    the first arc that lies on a qualifying cycle.
    """
    if g.num_arcs > max_arcs:
        raise BudgetExceededError(
            f"cycle search over {g.num_arcs} arcs exceeds budget of {max_arcs}"
        )
    for u, v in g.arcs():
        if require_one_way:
            if g.has_arc(v, u):
                continue
            # (v, u) is absent, so any path back has length >= 2
            starts = [v]
        else:
            starts = [w for w in g.succ[v] if w != u]
            if not starts:
                continue
        path = _reaches(g, starts, u, banned=v if not require_one_way else -1)
        if path is not None:
            # path runs from a start node to u; close it through (u, v)
            body = path[:-1] if require_one_way else [v, *path[:-1]]
            return (u, *body)
    return None


def verify_ham_cycle(g: Digraph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` visits every node once and consecutive nodes are arcs.

    Cycles shorter than 3 never qualify, so a bidirected K2 is not Hamiltonian.
    """
    if len(seq) != g.n or g.n < 3:
        return False
    if sorted(seq) != list(range(g.n)):
        return False
    return all(g.has_arc(seq[i], seq[(i + 1) % g.n]) for i in range(g.n))
