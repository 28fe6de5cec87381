"""The ILDT process: every node gains a clone each time-step.

Id scheme: in an ``n``-node graph the clone of node ``i`` gets id ``i + n``.
Consequently in ``G_t`` grown from an ``n0``-node seed, node ``x`` belongs to
the block of seed node ``x % n0`` and has *local id* ``x // n0`` inside that
block, where the local ids reproduce ``ILDT_t(K_1)`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import Digraph, count_basic, make_digraph
from .errors import GrowthOverflowError, PreconditionError

DEFAULT_MAX_ARCS = 2**31


@dataclass(frozen=True)
class Lineage:
    """Birth step of every node and the parent of every clone."""

    n0: int
    births: tuple[int, ...]
    parents: tuple[int | None, ...]

    @classmethod
    def initial(cls, n0: int) -> "Lineage":
        return cls(n0, (0,) * n0, (None,) * n0)

    @property
    def t(self) -> int:
        return max(self.births, default=0)

    def extend(self) -> "Lineage":
        n = len(self.births)
        step = self.t + 1 if n else 1
        return Lineage(
            self.n0,
            self.births + (step,) * n,
            self.parents + tuple(range(n)),
        )

    def parent(self, x: int) -> int | None:
        return self.parents[x]


@dataclass(frozen=True)
class Generation:
    graph: Digraph
    lineage: Lineage
    t: int

    @classmethod
    def seed(cls, g0: Digraph) -> "Generation":
        return cls(g0, Lineage.initial(g0.n), 0)


def ildt_step(gen: Generation, max_arcs: int = DEFAULT_MAX_ARCS) -> Generation:
    """Clone every node once.

    The clone ``x'`` of ``x`` copies all out- and in-arcs of ``x`` and is
    joined to ``x`` by a bidirectional arc. Clones are never adjacent to each
    other.
    """
    g = gen.graph
    n = g.n
    c = count_basic(g)
    predicted = 3 * c.e + 2 * n
    if predicted > max_arcs:
        raise GrowthOverflowError(
            f"step {gen.t + 1} would produce {predicted} arcs (cap {max_arcs})"
        )
    succ: list[list[int]] = [[] for _ in range(2 * n)]
    for x, targets in enumerate(g.succ):
        # arcs (x, z) and (x, z') plus x -> x'
        succ[x] = [*targets, *(z + n for z in targets), x + n]
        # the clone keeps x's out-arcs and points back to its parent
        succ[x + n] = [*targets, x]
    return Generation(Digraph.from_successors(succ), gen.lineage.extend(), gen.t + 1)


def ildt_iterate(g0: Digraph, t: int, max_arcs: int = DEFAULT_MAX_ARCS) -> Generation:
    if t < 0:
        raise PreconditionError(f"number of steps must be >= 0, got {t}")
    gen = Generation.seed(g0)
    for _ in range(t):
        gen = ildt_step(gen, max_arcs=max_arcs)
    return gen


def generations(g0: Digraph, t: int, max_arcs: int = DEFAULT_MAX_ARCS) -> list[Generation]:
    """All of ``G_0, ..., G_t``."""
    out = [Generation.seed(g0)]
    for _ in range(t):
        out.append(ildt_step(out[-1], max_arcs=max_arcs))
    return out


def embed_undirected(edges: Iterable[Sequence[int]], n: int) -> Digraph:
    """Replace each undirected edge ``{v, w}`` by arcs ``(v, w)`` and ``(w, v)``."""
    arcs = []
    for v, w in edges:
        arcs.append((v, w))
        arcs.append((w, v))
    return make_digraph(n, arcs)


def block_of(lineage: Lineage, x: int) -> int:
    """Seed ancestor of ``x``, found by walking the parent links."""
    if not 0 <= x < len(lineage.births):
        raise PreconditionError(f"node {x} not present in lineage of size {len(lineage.births)}")
    while (p := lineage.parents[x]) is not None:
        x = p
    return x


def clones_at(lineage: Lineage, t: int) -> frozenset[int]:
    if t > lineage.t:
        raise PreconditionError(f"step {t} is beyond the lineage's last step {lineage.t}")
    return frozenset(x for x, b in enumerate(lineage.births) if b == t)


def block_members(n0: int, t: int, root: int) -> list[int]:
    """Nodes of the block of ``root`` in ``G_t``, ordered by local id."""
    return [root + n0 * a for a in range(2**t)]
