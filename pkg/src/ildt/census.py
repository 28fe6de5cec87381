"""Exact arc and triad counts, by enumeration and by closed form.

Triangle conventions:

* ``D`` counts directed 3-cycles ``(x, y, z)`` up to rotation, ``T`` counts
  transitive patterns ``xyz`` (arcs ``(x,y), (y,z), (x,z)``), one per
  ordered assignment of the roles. Both ignore patterns whose three arcs are
  all bidirectional.
* ``B`` counts node triples joined pairwise by bidirectional arcs.

All closed forms use Python integers, so they never overflow; ``max_bits``
caps the size of results instead of letting them grow without bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .digraph import BasicCounts, Digraph
from .errors import BudgetExceededError, GrowthOverflowError, UndefinedLimitError

DEFAULT_MAX_BITS = 4096


@dataclass(frozen=True)
class TriadCounts:
    D: int
    T: int
    B: int

    def as_dict(self) -> dict[str, int]:
        return {"D": self.D, "T": self.T, "B": self.B}


@dataclass(frozen=True)
class DensificationReport:
    t: int
    ratio: Fraction
    predicted: Fraction
    relative_error: Fraction

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "ratio": str(self.ratio),
            "ratio_float": float(self.ratio),
            "predicted": str(self.predicted),
            "predicted_float": float(self.predicted),
            "relative_error": float(self.relative_error),
        }


def _guard(value: int, what: str, max_bits: int) -> int:
    if value.bit_length() > max_bits:
        raise GrowthOverflowError(f"{what} needs {value.bit_length()} bits (limit {max_bits})")
    return value


def closed_form_basic(c0: BasicCounts, t: int, max_bits: int = DEFAULT_MAX_BITS) -> BasicCounts:
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    n0, e0, b0 = c0.n, c0.e, c0.b
    n = 2**t * n0
    e = 3**t * (e0 + 2 * n0) - 2 ** (t + 1) * n0
    b = 3**t * (b0 + n0) - 2**t * n0
    return BasicCounts(_guard(n, "n_t", max_bits), _guard(e, "e_t", max_bits), _guard(b, "b_t", max_bits))


def basic_recurrence_step(c: BasicCounts) -> BasicCounts:
    return BasicCounts(2 * c.n, 3 * c.e + 2 * c.n, 3 * c.b + c.n)


def triad_census_bruteforce(
    g: Digraph, max_nodes: int = 2048, time_budget: float | None = None
) -> TriadCounts:
    """Enumerate every triangle of the underlying simple graph.

    Triangles are found from each adjacent pair ``u < v`` by scanning common
    neighbours ``w > v``.
    """
    if g.n > max_nodes:
        raise BudgetExceededError(
            f"brute-force census on {g.n} nodes exceeds the {max_nodes}-node budget; "
            "use the closed forms instead"
        )
    deadline = None if time_budget is None else time.monotonic() + time_budget
    nbrs = [g.neighbors(u) for u in range(g.n)]
    D = T = B = 0
    for u in range(g.n):
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceededError(
                f"brute-force census exceeded {time_budget}s; use the closed forms instead"
            )
        for v in nbrs[u]:
            if v <= u:
                continue
            for w in nbrs[u] & nbrs[v]:
                if w <= v:
                    continue
                d, tr, bi = _classify_triangle(g, u, v, w)
                D += d
                T += tr
                B += bi
    return TriadCounts(D, T, B)


def _classify_triangle(g: Digraph, u: int, v: int, w: int) -> tuple[int, int, int]:
    arc = g.has_arc
    if all(g.is_bidirectional(a, b) for a, b in ((u, v), (v, w), (u, w))):
        return 0, 0, 1

    def one_way(a: int, b: int) -> bool:
        return not arc(b, a)

    d = 0
    for x, y, z in ((u, v, w), (u, w, v)):
        if arc(x, y) and arc(y, z) and arc(z, x):
            if one_way(x, y) or one_way(y, z) or one_way(z, x):
                d += 1
    tr = 0
    for x, y, z in permutations((u, v, w)):
        if arc(x, y) and arc(y, z) and arc(x, z):
            if one_way(x, y) or one_way(y, z) or one_way(x, z):
                tr += 1
    return d, tr, 0


def triad_recurrence_step(c: BasicCounts, tr: TriadCounts) -> TriadCounts:
    """Triad counts one step later, from the current arc and triad counts."""
    return TriadCounts(4 * tr.D, 4 * tr.T + 4 * (c.e - 2 * c.b), 4 * tr.B + 2 * c.b)


def triad_iterate(c0: BasicCounts, t0: TriadCounts, t: int) -> TriadCounts:
    c, tr = c0, t0
    for _ in range(t):
        c, tr = basic_recurrence_step(c), triad_recurrence_step(c, tr)
    return tr


def triad_closed_form(
    c0: BasicCounts, t0: TriadCounts, t: int, max_bits: int = DEFAULT_MAX_BITS
) -> TriadCounts:
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    n0, e0, b0 = c0.n, c0.e, c0.b
    p4, p3, p2 = 4**t, 3**t, 2**t
    D = p4 * t0.D
    T = p4 * t0.T + 4 * (p4 - p3) * (e0 - 2 * b0)
    B = p4 * t0.B + 2 * b0 * (p4 - p3) + n0 * (p4 - 2 * p3 + p2)
    return TriadCounts(_guard(D, "D_t", max_bits), _guard(T, "T_t", max_bits), _guard(B, "B_t", max_bits))


def densification(c0: BasicCounts, t: int) -> DensificationReport:
    """Arc-to-node ratio at step ``t`` against its ``(3/2)^t`` asymptote."""
    c = closed_form_basic(c0, t)
    ratio = Fraction(c.e, c.n)
    predicted = Fraction(3, 2) ** t * Fraction(c0.e + 2 * c0.n, c0.n)
    rel = abs(ratio / predicted - 1)
    return DensificationReport(t, ratio, predicted, rel)


def triad_ratio_limit(c0: BasicCounts, t0: TriadCounts) -> Fraction:
    """Limit of ``D_t / T_t`` as ``t`` grows."""
    denom = t0.T + 4 * (c0.e - 2 * c0.b)
    if denom == 0:
        raise UndefinedLimitError("T_t stays 0, so D_t / T_t has no limit")
    return Fraction(t0.D, denom)


def triad_ratio(c0: BasicCounts, t0: TriadCounts, t: int) -> Fraction:
    tr = triad_closed_form(c0, t0, t)
    if tr.T == 0:
        raise UndefinedLimitError(f"T_{t} is 0")
    return Fraction(tr.D, tr.T)
