"""Directed Hamiltonian cycles in ILDT digraphs built from nice closed walks.

Block conventions (see :mod:`ildt.generator`): node ``x`` of ``D_t`` lies in
the block of seed node ``x % n0`` with local id ``x // n0``. Inside a block the
local ids form ``ILDT_t(K_1)``; the *clones* of a block are the nodes born at
the last step, local ids ``2**(t-1) .. 2**t - 1``, and the rest are
*non-clones*.

A closed walk is given as a cyclic node sequence without repeating the start
at the end, so ``(0, 1, 2, 1)`` stands for ``0 -> 1 -> 2 -> 1 -> 0``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .digraph import Digraph, find_oriented_cycle, verify_ham_cycle
from .errors import ConstructionError, PreconditionError
from .generator import generations, ildt_iterate


def _cyclic(walk: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(int(v) for v in walk)
    # a closing repeat of the start would be a self-loop, so it can only mean "closed"
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq = seq[:-1]
    return seq


def max_frequency(walk: Sequence[int]) -> int:
    seq = _cyclic(walk)
    return max(Counter(seq).values(), default=0)


def nice_violations(walk: Sequence[int], d: Digraph) -> list[str]:
    """Reasons ``walk`` is not a nice closed spanning walk of ``d`` (empty if it is).

    Edge ``k`` of the walk, ``seq[k] -> seq[k+1]``, must either be the last
    departure from ``seq[k]`` or lead to a node not seen earlier in the walk.
    The start node counts as seen from the outset, so the closing edge can
    only qualify as a last departure.
    """
    seq = _cyclic(walk)
    if len(seq) < 2:
        return ["a closed walk needs at least two nodes"]
    problems = []
    missing = set(range(d.n)) - set(seq)
    if missing:
        problems.append(f"walk does not span: nodes {sorted(missing)} never visited")
    bad = [v for v in seq if not 0 <= v < d.n]
    if bad:
        return problems + [f"walk uses nodes {bad} outside the graph"]
    length = len(seq)
    last_departure = {v: k for k, v in enumerate(seq)}
    seen = {seq[0]}
    for k in range(length):
        u, v = seq[k], seq[(k + 1) % length]
        if not d.has_arc(u, v):
            problems.append(f"step {k}: ({u}, {v}) is not an arc")
        first_entry = v not in seen
        seen.add(v)
        if not (last_departure[u] == k or first_entry):
            problems.append(
                f"step {k}: ({u}, {v}) is neither the last departure from {u} "
                f"nor the first entry to {v}"
            )
    return problems


def is_nice(walk: Sequence[int], d: Digraph) -> bool:
    return len(walk) > 0 and not nice_violations(walk, d)


@dataclass(frozen=True)
class NiceWalk:
    nodes: tuple[int, ...]
    s: int

    @classmethod
    def of(cls, walk: Sequence[int], d: Digraph) -> "NiceWalk":
        problems = nice_violations(walk, d)
        if problems:
            raise PreconditionError("walk is not nice: " + "; ".join(problems))
        seq = _cyclic(walk)
        return cls(seq, max_frequency(seq))


@dataclass(frozen=True)
class HamCycle:
    nodes: tuple[int, ...]
    t: int
    walk: NiceWalk
    # (tail, head) of every move from one block into another, in order
    crossings: tuple[tuple[int, int], ...] = ()


def dfs_nice_walk(d: Digraph) -> NiceWalk:
    """Closed walk of a depth-first traversal from node 0, back-tracking included.

    Neighbours are explored in ascending id order.
    """
    if d.n < 2:
        raise PreconditionError("a closed spanning walk needs at least two nodes")
    for u, v in d.arcs():
        if not d.has_arc(v, u):
            raise PreconditionError(f"arc ({u}, {v}) is not reciprocated; DFS walks need a bidirected graph")
    seq = [0]
    visited = {0}
    stack = [(0, iter(d.succ[0]))]
    while stack:
        u, it = stack[-1]
        for v in it:
            if v not in visited:
                visited.add(v)
                seq.append(v)
                stack.append((v, iter(d.succ[v])))
                break
        else:
            stack.pop()
            if stack:
                seq.append(stack[-1][0])
    if len(visited) < d.n:
        unreached = min(set(range(d.n)) - visited)
        raise PreconditionError(f"graph is disconnected: node {unreached} is unreachable from 0")
    return NiceWalk.of(seq, d)


def find_nice_walk(d: Digraph, max_length: int | None = None) -> NiceWalk | None:
    """Shortest nice walk by exhaustive search, or None if none is short enough.

    Ties are broken by start node, then lexicographically. Exponential; meant
    for seeds of a handful of nodes.
    """
    if d.n < 2:
        return None
    if max_length is None:
        max_length = 2 * d.n
    for length in range(d.n, max_length + 1):
        for start in range(d.n):
            for walk in _closed_walks(d, start, length):
                if not nice_violations(walk, d):
                    return NiceWalk.of(walk, d)
    return None


def _closed_walks(d: Digraph, start: int, length: int):
    seq = [start]

    def extend():
        if len(seq) == length:
            if d.has_arc(seq[-1], start):
                yield tuple(seq)
            return
        for v in d.succ[seq[-1]]:
            seq.append(v)
            yield from extend()
            seq.pop()

    yield from extend()


def min_time_for(walk: NiceWalk | int) -> int:
    """Smallest ``t >= 1`` with ``2**(t-1) >= s``."""
    s = walk.s if isinstance(walk, NiceWalk) else int(walk)
    t = 1
    while 2 ** (t - 1) < s:
        t += 1
    return t


@lru_cache(maxsize=None)
def _block_path(t: int, v: int) -> tuple[int, ...]:
    if t == 1:
        return (1, 0)
    half = 2 ** (t - 1)
    if v & 1:
        # v sits with node 1: run to 1, hop to the first even clone, run to 0
        w = half
        p1 = [2 * k + 1 for k in _block_path(t - 1, (v - 1) // 2)]
        p0 = [2 * k for k in _block_path(t - 1, w // 2)]
        return tuple(p1 + p0)
    # v sits with node 0: follow its path up to the node x before 0, hop to 1,
    # walk the odd half backwards from 1 to its first clone w, then finish at 0
    w = half + 1
    p0 = [2 * k for k in _block_path(t - 1, v // 2)]
    p1 = [2 * k + 1 for k in _block_path(t - 1, (w - 1) // 2)]
    return tuple(p0[:-1] + p1[::-1] + [0])


def clone_block_path(t: int, v: int) -> tuple[int, ...]:
    """Hamiltonian path of ``ILDT_t(K_1)`` from clone ``v`` to node 0.

    The nodes are split by parity: even ids descend from 0, odd ids from 1,
    and ``k -> 2k`` resp. ``k -> 2k + 1`` map ``ILDT_{t-1}(K_1)`` onto each
    half. The path alternates clone and non-clone.
    """
    if t < 1:
        raise PreconditionError(f"t must be >= 1, got {t}")
    if not 2 ** (t - 1) <= v < 2**t:
        raise PreconditionError(
            f"node {v} is not a clone of ILDT_{t}(K_1); clones are {2 ** (t - 1)}..{2**t - 1}"
        )
    return _block_path(t, v)


def build_ham_cycle(
    d0: Digraph, walk: NiceWalk | Sequence[int], t: int, dt: Digraph | None = None
) -> HamCycle:
    """Directed Hamiltonian cycle of ``ILDT_t(d0)`` steered by a nice walk.

    Each block keeps a cursor on a block path. Leaving a block for the last
    time drains the rest of its path down to local node 0; any other departure
    advances the cursor one node. A first entry into a block lands on its
    lowest-id reachable clone, which also fixes that block's path.

    ``dt`` may pass in the already generated ``ILDT_t(d0)``.
    Raises PreconditionError if the walk is not nice or ``t`` is too small,
    ConstructionError if a needed arc is missing (a bug, never expected).
    """
    nw = walk if isinstance(walk, NiceWalk) else NiceWalk.of(walk, d0)
    if t < 1 or 2 ** (t - 1) < nw.s:
        raise PreconditionError(f"need 2^(t-1) >= s = {nw.s}, got t = {t}")
    if dt is None:
        dt = ildt_iterate(d0, t).graph
    n0 = d0.n
    half = 2 ** (t - 1)
    seq = nw.nodes
    length = len(seq)
    last_departure = {v: k for k, v in enumerate(seq)}

    paths: dict[int, tuple[int, ...]] = {}
    cursor: dict[int, int] = {}

    def node(block: int, local: int) -> int:
        return block + n0 * local

    def state() -> str:
        return ", ".join(f"V{b}@{cursor[b]}/{len(paths[b]) - 1}" for b in sorted(paths))

    def open_block(block: int, tail: int | None) -> int:
        for local in range(half, 2 * half):
            if tail is None or dt.has_arc(tail, node(block, local)):
                paths[block] = clone_block_path(t, local)
                cursor[block] = 0
                return node(block, local)
        raise ConstructionError(f"no clone of V{block} is reachable from {tail}; cursors: {state()}")

    cycle = [open_block(seq[0], None)]
    crossings = []
    for k in range(length):
        i, j = seq[k], seq[(k + 1) % length]
        path = paths[i]
        if k == last_departure[i]:
            cycle.extend(node(i, a) for a in path[cursor[i] + 1 :])
            cursor[i] = len(path) - 1
        else:
            cursor[i] += 1
            if cursor[i] >= len(path) - 1:
                raise ConstructionError(f"V{i} ran out of path before its last visit; cursors: {state()}")
            cycle.append(node(i, path[cursor[i]]))
        tail = cycle[-1]
        if k == length - 1:
            head = cycle[0]
        elif j not in paths:
            head = open_block(j, tail)
        else:
            cursor[j] += 1
            if cursor[j] >= len(paths[j]):
                raise ConstructionError(f"V{j} is exhausted but the walk re-enters it; cursors: {state()}")
            head = node(j, paths[j][cursor[j]])
        if not dt.has_arc(tail, head):
            raise ConstructionError(
                f"missing arc {tail} -> {head} from V{i} to V{j} at walk step {k}; cursors: {state()}"
            )
        crossings.append((tail, head))
        if k < length - 1:
            cycle.append(head)

    if not verify_ham_cycle(dt, cycle):
        raise ConstructionError(f"constructed sequence is not a Hamiltonian cycle of D_{t}: {cycle}")
    return HamCycle(tuple(cycle), t, nw, tuple(crossings))


def oriented_cycle_flags(g0: Digraph, t: int, max_arcs: int = 1_000_000) -> list[bool]:
    """Whether each of ``G_0 .. G_t`` contains an oriented cycle."""
    return [find_oriented_cycle(gen.graph, max_arcs=max_arcs) is not None for gen in generations(g0, t)]


def cycle_preservation_check(g0: Digraph, t: int, max_arcs: int = 1_000_000) -> bool:
    flags = oriented_cycle_flags(g0, t, max_arcs=max_arcs)
    return all(a == b for a, b in itertools.pairwise(flags))
