"""Reading and writing digraphs, and the builtin seed graphs.

Formats:

* ``json``: ``{"n": 3, "arcs": [[0, 1], [1, 2], [2, 0]]}``
* ``edgelist``: one arc ``u v`` per line. ``#`` starts a comment; a
  ``# nodes: N`` line fixes the node count, otherwise it is the largest id
  plus one and every id below it must occur.
* ``dot``: export only; a bidirectional pair becomes one ``dir=both`` edge.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .digraph import Digraph, make_digraph
from .errors import GraphParseError, InvalidGraphError
from .generator import embed_undirected

FORMATS = ("edgelist", "json", "dot")

_NODES_HEADER = re.compile(r"#\s*nodes\s*:\s*(\d+)\s*$")


def to_json(g: Digraph) -> str:
    return json.dumps({"n": g.n, "arcs": [list(a) for a in g.arcs()]}, separators=(",", ":")) + "\n"


def to_edgelist(g: Digraph) -> str:
    """One ``u v`` line per arc; the node-count header appears only when needed."""
    lines = []
    if any(not g.succ[v] and not g.pred[v] for v in range(g.n)):
        # isolated nodes cannot be recovered from the arcs alone
        lines.append(f"# nodes: {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "".join(line + "\n" for line in lines)


def to_dot(g: Digraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    for u, v in g.arcs():
        if g.has_arc(v, u):
            if u < v:
                lines.append(f"  {u} -> {v} [dir=both];")
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(g: Digraph, fmt: str) -> str:
    if fmt == "json":
        return to_json(g)
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_json(text: str) -> Digraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, exc.lineno) from exc
    if not isinstance(data, dict) or "n" not in data or "arcs" not in data:
        raise GraphParseError('expected an object with keys "n" and "arcs"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphParseError(f'"n" must be a non-negative integer, got {n!r}')
    arcs = []
    for i, arc in enumerate(data["arcs"]):
        if (
            not isinstance(arc, list)
            or len(arc) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in arc)
        ):
            raise GraphParseError(f"arc #{i} must be a pair of integers, got {arc!r}")
        if not all(0 <= x < n for x in arc):
            raise GraphParseError(f"arc #{i} {arc} has an endpoint outside [0, {n})")
        if arc[0] == arc[1]:
            raise GraphParseError(f"arc #{i} {arc} is a self-loop")
        arcs.append(tuple(arc))
    return make_digraph(n, arcs)


def parse_edgelist(text: str) -> Digraph:
    declared: int | None = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _NODES_HEADER.match(line)
            if m:
                declared = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {raw!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"node ids must be integers, got {raw!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"node ids must be non-negative, got {raw!r}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at node {u}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise GraphParseError(f"arc ({u}, {v}) exceeds the declared {declared} nodes", lineno)
        arcs.append((u, v))
    if declared is not None:
        n = declared
    else:
        n = 1 + max((max(a) for a in arcs), default=-1)
        used = {x for a in arcs for x in a}
        gaps = sorted(set(range(n)) - used)
        if gaps:
            raise GraphParseError(
                f"node ids must be contiguous; missing {gaps[:5]} (add a '# nodes: N' line for isolated nodes)"
            )
    return make_digraph(n, arcs)


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix == ".dot" or suffix == ".gv":
        return "dot"
    return "edgelist"


def load_graph(path: str | Path, fmt: str | None = None) -> Digraph:
    fmt = fmt or guess_format(path)
    text = Path(path).read_text()
    if fmt == "json":
        return parse_json(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise GraphParseError(f"cannot read format {fmt!r}; use json or edgelist")


def save_graph(g: Digraph, path: str | Path, fmt: str | None = None) -> None:
    Path(path).write_text(dumps(g, fmt or guess_format(path)))


# -- builtin seeds -----------------------------------------------------------

def directed_cycle(n: int) -> Digraph:
    return make_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def bidirected_path(n: int) -> Digraph:
    return embed_undirected([(i, i + 1) for i in range(n - 1)], n)


def bidirected_cycle(n: int) -> Digraph:
    return embed_undirected([(i, (i + 1) % n) for i in range(n)], n)


def bidirected_complete(n: int) -> Digraph:
    return embed_undirected([(i, j) for i in range(n) for j in range(i + 1, n)], n)


_BUILTIN = re.compile(r"(?P<kind>c|p|k)(?P<n>\d+)(?P<bi>bi)?$")


def builtin_seed(name: str) -> Digraph:
    """Seed graphs by name.

    ``cN`` directed N-cycle (``c3`` is the running example), ``k1``,
    ``dag2`` (the single arc 0 -> 1), and the bidirected families ``pNbi``,
    ``cNbi``, ``kNbi`` (so ``k2bi`` is the bidirected K2).
    """
    if name == "dag2":
        return make_digraph(2, [(0, 1)])
    m = _BUILTIN.match(name)
    if m is None:
        raise InvalidGraphError(f"unknown builtin seed {name!r}")
    kind, n, bi = m["kind"], int(m["n"]), m["bi"] is not None
    if n < 1:
        raise InvalidGraphError(f"builtin seed {name!r} needs at least one node")
    if kind == "k" and (bi or n == 1):
        return bidirected_complete(n)
    if kind == "c" and not bi and n >= 3:
        return directed_cycle(n)
    if kind == "c" and bi and n >= 3:
        return bidirected_cycle(n)
    if kind == "p" and bi:
        return bidirected_path(n)
    raise InvalidGraphError(f"unknown builtin seed {name!r}")


def resolve_seed(spec: str) -> Digraph:
    """``builtin:NAME`` or a path to a json/edgelist file."""
    if spec.startswith("builtin:"):
        return builtin_seed(spec.split(":", 1)[1])
    return load_graph(spec)


def builtin_walk(name: str) -> tuple[int, ...] | None:
    """The cycle itself serves as the nice walk of a directed N-cycle seed."""
    m = _BUILTIN.match(name)
    if m and m["kind"] == "c" and m["bi"] is None and int(m["n"]) >= 3:
        return tuple(range(int(m["n"])))
    return None
