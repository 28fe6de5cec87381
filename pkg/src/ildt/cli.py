"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad input graph, failed verification,
budget exceeded, ...), 2 usage error. ``--json`` prints a report envelope to
stdout; files written with ``--out`` hold only deterministic results.

Resource caps can be overridden through ``ILDT_MAX_ARCS``, ``ILDT_MAX_VALUES``
and ``ILDT_TIME_BUDGET``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import census as cen
from . import hamilton as ham
from . import spectral as spec
from .digraph import count_basic, verify_ham_cycle
from .errors import ILDTError, PreconditionError, UndefinedLimitError
from .generator import DEFAULT_MAX_ARCS, ildt_iterate
from .graphio import FORMATS, builtin_walk, dumps, load_graph, resolve_seed, to_json

SPECTRUM_TOL = 1e-6


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    seed: str | None = None
    steps: int | None = None
    out: str | None = None
    format: str | None = None
    flags: dict[str, Any] = field(default_factory=dict)
    max_arcs: int = DEFAULT_MAX_ARCS
    max_values: int = spec.DEFAULT_MAX_VALUES
    time_budget: float = 600.0

    def __post_init__(self) -> None:
        if self.steps is not None and self.steps < 0:
            raise UsageError(f"--steps must be >= 0, got {self.steps}")
        for name in ("max_arcs", "max_values", "time_budget"):
            if getattr(self, name) <= 0:
                raise UsageError(f"{name} must be positive")


def _env_caps() -> dict[str, Any]:
    caps: dict[str, Any] = {}
    for var, key, kind in (
        ("ILDT_MAX_ARCS", "max_arcs", int),
        ("ILDT_MAX_VALUES", "max_values", int),
        ("ILDT_TIME_BUDGET", "time_budget", float),
    ):
        raw = os.environ.get(var)
        if raw is not None:
            try:
                caps[key] = kind(raw)
            except ValueError:
                raise UsageError(f"{var}={raw!r} is not a valid {kind.__name__}") from None
    return caps


def _fmt(x: float) -> str:
    # adding 0.0 turns -0.0 into 0.0
    return format(float(x) + 0.0, ".17g")


def _write_csv(path: str | None, values: np.ndarray, t: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im", "t"])
    for z in values:
        w.writerow([_fmt(z.real), _fmt(z.imag), t])
    text = buf.getvalue()
    if path:
        Path(path).write_text(text)
    return text


def _write_json(path: str | None, payload: dict) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# -- commands ----------------------------------------------------------------

def cmd_generate(cfg: RunConfig) -> tuple[dict, dict]:
    g0 = resolve_seed(cfg.seed)
    gen = ildt_iterate(g0, cfg.steps, max_arcs=cfg.max_arcs)
    text = dumps(gen.graph, cfg.format or "edgelist")
    if cfg.out:
        Path(cfg.out).write_text(text)
    elif not cfg.flags.get("json"):
        sys.stdout.write(text)
    counts = count_basic(gen.graph)
    predicted = cen.closed_form_basic(count_basic(g0), cfg.steps)
    return {"counts": counts.as_dict(), "closed_form": predicted.as_dict()}, {
        "counts_match_closed_form": counts == predicted
    }


def cmd_census(cfg: RunConfig) -> tuple[dict, dict]:
    g0 = resolve_seed(cfg.seed)
    t = cfg.steps
    c0 = count_basic(g0)
    t0 = cen.triad_census_bruteforce(g0)
    basic = cen.closed_form_basic(c0, t)
    closed = cen.triad_closed_form(c0, t0, t)
    rec = cen.triad_iterate(c0, t0, t)
    dens = cen.densification(c0, t)
    try:
        limit: str | None = str(cen.triad_ratio_limit(c0, t0))
    except UndefinedLimitError:
        limit = None
    results: dict[str, Any] = {
        "seed": cfg.seed,
        "steps": t,
        "seed_counts": {**c0.as_dict(), **t0.as_dict()},
        "closed_form": {**basic.as_dict(), **closed.as_dict()},
        "recurrence": rec.as_dict(),
        "densification": dens.as_dict(),
        "triad_ratio_limit": limit,
    }
    agreement = {"closed_form_matches_recurrence": closed == rec}
    if cfg.flags.get("bruteforce"):
        g = ildt_iterate(g0, t, max_arcs=cfg.max_arcs).graph
        direct = count_basic(g)
        bf = cen.triad_census_bruteforce(g, time_budget=cfg.time_budget)
        results["bruteforce"] = {**direct.as_dict(), **bf.as_dict()}
        results["agrees"] = bf == closed and bf == rec and direct == basic
        agreement["bruteforce_matches_closed_form"] = results["agrees"]
    _write_json(cfg.out, results)
    return results, agreement


def cmd_spectrum(cfg: RunConfig) -> tuple[dict, dict]:
    g0 = resolve_seed(cfg.seed)
    s0 = spec.initial_spectrum(g0)
    s = spec.spectrum_iterate(s0, cfg.steps, max_values=cfg.max_values)
    agreement: dict[str, Any] = {}
    results: dict[str, Any] = {"seed": cfg.seed, "steps": cfg.steps, "count": len(s)}
    if cfg.flags.get("direct"):
        g = ildt_iterate(g0, cfg.steps, max_arcs=cfg.max_arcs).graph
        direct = spec.initial_spectrum(g, cfg.steps)
        err = spec.match_spectra(s.values, direct.values)
        results["max_match_error"] = err
        agreement["recursion_matches_direct"] = bool(err < SPECTRUM_TOL)
    if cfg.flags.get("normalize"):
        s = spec.normalize_spectrum(s)
    results["normalized"] = s.normalized
    text = _write_csv(cfg.out, spec.sort_complex(s.values), cfg.steps)
    if not cfg.out and not cfg.flags.get("json"):
        sys.stdout.write(text)
    return results, agreement


def cmd_curve(cfg: RunConfig) -> tuple[dict, dict]:
    sample = spec.curve_sample(
        cfg.steps,
        cfg.flags["seeds"],
        normalize=cfg.flags.get("normalize", False),
        max_points=cfg.max_values,
        resolution=cfg.flags.get("resolution", spec.DEFAULT_CURVE_RESOLUTION),
    )
    text = _write_csv(cfg.out, sample.points, cfg.steps)
    if not cfg.out and not cfg.flags.get("json"):
        sys.stdout.write(text)
    return {
        "steps": cfg.steps,
        "seeds": cfg.flags["seeds"],
        "points": int(sample.points.size),
        "normalized": sample.normalized,
        "thinned": sample.thinned,
    }, {}


def _read_walk(path: str) -> list[int]:
    text = Path(path).read_text().strip()
    if text.startswith("[") or text.startswith("{"):
        data = json.loads(text)
        if isinstance(data, dict):
            data = data["walk"]
        return [int(v) for v in data]
    return [int(v) for v in text.replace(",", " ").split()]


def cmd_hamilton(cfg: RunConfig) -> tuple[dict, dict]:
    g0 = resolve_seed(cfg.seed)
    walk_arg = cfg.flags.get("walk") or "auto"
    if walk_arg == "auto":
        name = cfg.seed.split(":", 1)[1] if cfg.seed.startswith("builtin:") else ""
        fixed = builtin_walk(name)
        if fixed is not None:
            walk = ham.NiceWalk.of(fixed, g0)
        elif all(g0.has_arc(v, u) for u, v in g0.arcs()):
            walk = ham.dfs_nice_walk(g0)
        else:
            found = ham.find_nice_walk(g0)
            if found is None:
                raise PreconditionError("no nice walk found; supply one with --walk FILE")
            walk = found
    else:
        walk = ham.NiceWalk.of(_read_walk(walk_arg), g0)
    t = cfg.steps if cfg.steps is not None else ham.min_time_for(walk)
    dt = ildt_iterate(g0, t, max_arcs=cfg.max_arcs).graph
    cycle = ham.build_ham_cycle(g0, walk, t, dt=dt)
    results = {
        "seed": cfg.seed,
        "t": t,
        "n": dt.n,
        "walk": list(walk.nodes),
        "s": walk.s,
        "cycle": list(cycle.nodes),
        "verified": True,
    }
    _write_json(cfg.out, results)
    if cfg.flags.get("graph_out"):
        Path(cfg.flags["graph_out"]).write_text(to_json(dt))
    return results, {"cycle_verified": True}


def cmd_verify(cfg: RunConfig) -> tuple[dict, dict]:
    g = load_graph(cfg.flags["graph"])
    try:
        data = json.loads(Path(cfg.flags["cycle"]).read_text())
        seq = data["cycle"] if isinstance(data, dict) else data
        seq = [int(v) for v in seq]
        valid = verify_ham_cycle(g, seq)
    except (ValueError, KeyError, TypeError):
        valid = False
    return {"valid": valid, "n": g.n}, {"cycle_verified": valid}


COMMANDS = {
    "generate": cmd_generate,
    "census": cmd_census,
    "spectrum": cmd_spectrum,
    "curve": cmd_curve,
    "hamilton": cmd_hamilton,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ildt", description="Iterated local directed transitivity graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, seed=True, steps=True):
        if seed:
            sp.add_argument("--seed", required=True, help="builtin:NAME or a json/edgelist file")
        if steps:
            sp.add_argument("--steps", type=int, required=True)
        sp.add_argument("--out")
        sp.add_argument("--json", action="store_true", help="print the report envelope to stdout")
        return sp

    g = common(sub.add_parser("generate", help="write G_t"))
    g.add_argument("--format", choices=FORMATS, default="edgelist")

    c = common(sub.add_parser("census", help="arc and triad counts of G_t"))
    c.add_argument("--bruteforce", action="store_true")

    s = common(sub.add_parser("spectrum", help="eigenvalues of G_t as CSV"))
    s.add_argument("--normalize", action="store_true")
    s.add_argument("--direct", action="store_true", help="also compute the spectrum of G_t itself and compare")

    cv = common(sub.add_parser("curve", help="image of the unit circle as CSV"), seed=False)
    cv.add_argument("--seeds", type=int, default=256)
    cv.add_argument("--normalize", action="store_true")
    cv.add_argument("--resolution", type=float, default=spec.DEFAULT_CURVE_RESOLUTION)

    h = common(sub.add_parser("hamilton", help="Hamiltonian cycle of ILDT_t(seed)"), steps=False)
    h.add_argument("--walk", default="auto", help="auto, or a file holding the walk")
    steps = h.add_mutually_exclusive_group()
    steps.add_argument("--steps", type=int)
    steps.add_argument("--min-steps", action="store_true", help="smallest t allowed by the walk (default)")
    h.add_argument("--graph-out", help="also write ILDT_t(seed) as JSON")

    v = sub.add_parser("verify", help="check a Hamiltonian cycle")
    v.add_argument("--graph", required=True)
    v.add_argument("--cycle", required=True)
    v.add_argument("--json", action="store_true")
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    known = {"command", "seed", "steps", "out", "format", "min_steps"}
    flags = {k: v for k, v in vars(ns).items() if k not in known}
    return RunConfig(
        command=ns.command,
        seed=getattr(ns, "seed", None),
        steps=getattr(ns, "steps", None),
        out=getattr(ns, "out", None),
        format=getattr(ns, "format", None),
        flags=flags,
        **_env_caps(),
    )


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        ns = build_parser().parse_args(argv)
        cfg = _config(ns)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    start = time.perf_counter()
    envelope: dict[str, Any] = {"command": cfg.command, "config": asdict(cfg), "error": None}
    code = 0
    try:
        results, agreement = COMMANDS[cfg.command](cfg)
        envelope["results"] = results
        envelope["agreement"] = agreement
        if cfg.command == "verify" and not results["valid"]:
            code = 1
    except (ILDTError, OSError, ValueError) as exc:
        message = " ".join(str(exc).split())
        envelope["error"] = f"{type(exc).__name__}: {message}"
        code = 1
    envelope["wall_time"] = round(time.perf_counter() - start, 6)
    if cfg.flags.get("json"):
        print(json.dumps(envelope, sort_keys=True, default=str))
    elif envelope["error"]:
        print(f"error: {envelope['error']}", file=sys.stderr)
    elif cfg.command in ("census", "hamilton", "verify") and not cfg.out:
        print(json.dumps(envelope["results"], indent=2, sort_keys=True))
    return code


def main() -> None:
    sys.exit(run())
