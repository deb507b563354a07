"""Grid experiments driven by INI-style config files.

A config has an ``[experiment]`` section (``kind``, ``master_seed`` and
kind-specific scalars) and a ``[grid]`` section whose comma-separated values
are expanded as a Cartesian product in file order. The report is JSON lines:
a header record, one record per run, then one aggregate record per grid
cell; the same aggregates are written as CSV next to it. Wall-clock timings
go to a separate ``.timing.csv`` so the report itself is reproducible.
"""

from __future__ import annotations

import configparser
import csv
import io
import itertools
import json
import statistics
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from .detprune import DetPruneConfig, det_prune
from .errors import ConfigError, FrsError
from .frs import FrsParams, corrupt, decoding_radius
from .harness import (
    DecodeOptions,
    brute_force_list,
    decode_end_to_end,
    max_errors_below,
    plant_word,
    random_codeword,
)
from .interp import harness_container
from .linalg import count_field_ops
from .randprune import FAIL, dimension_profile, gk16_bound, rand_prune_once
from .seeds import child_seed

KINDS = ("decode", "success", "listsize", "scaling", "gk16")
INT_KEYS = {"q", "n", "m", "Rn", "s", "k", "planted", "N"}
FRACTION_KEYS = {"eps", "beta", "eps_frac"}
STR_KEYS = {"algo", "errors"}
SCALARS = {
    "kind": str,
    "master_seed": int,
    "instances": int,
    "trials": int,
    "oracle": lambda v: v.strip().lower() in ("1", "true", "yes", "on"),
}


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _line_of(text: str, section: str, key: str | None) -> int | None:
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if key is None and current == section:
                return lineno
            continue
        if current == section and key is not None and line.split("=", 1)[0].strip() == key:
            return lineno
    return None


def _parse_value(key: str, raw: str, text: str):
    try:
        if key in INT_KEYS:
            return int(raw)
        if key in FRACTION_KEYS:
            return Fraction(raw)
        if key in STR_KEYS:
            return raw
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse {raw!r}", line=_line_of(text, "grid", key), field=key) from exc
    raise ConfigError("unknown grid key", line=_line_of(text, "grid", key), field=key)


def parse_config(text: str) -> tuple[dict, list[tuple[str, list]]]:
    """Return (experiment settings, [(grid key, values), ...])."""
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc.message.splitlines()[0]}", line=getattr(exc, "lineno", None)) from exc
    if not cp.has_section("experiment"):
        raise ConfigError("missing [experiment] section")
    settings = {"master_seed": 0, "instances": 1, "trials": 100, "oracle": True}
    for key, raw in cp.items("experiment"):
        if key not in SCALARS:
            raise ConfigError("unknown setting", line=_line_of(text, "experiment", key), field=key)
        try:
            settings[key] = SCALARS[key](raw)
        except ValueError as exc:
            raise ConfigError(f"cannot parse {raw!r}", line=_line_of(text, "experiment", key), field=key) from exc
    if settings.get("kind") not in KINDS:
        raise ConfigError(f"kind must be one of {KINDS}", line=_line_of(text, "experiment", "kind"), field="kind")
    grid = []
    if cp.has_section("grid"):
        for key, raw in cp.items("grid"):
            values = [_parse_value(key, v.strip(), text) for v in raw.split(",") if v.strip()]
            grid.append((key, values))
    if not grid:
        grid = [("", [])]  # no grid means no cells
    return settings, grid


def grid_cells(grid):
    keys = [k for k, _ in grid]
    for combo in itertools.product(*(v for _, v in grid)):
        yield dict(zip(keys, combo))


def _params(cell: dict) -> FrsParams:
    m = cell.get("m", 1)
    n = cell["n"] if "n" in cell else cell["N"] * m
    return FrsParams.create(cell["q"], n, m, cell["Rn"])


def _errors(cell: dict, radius, N: int) -> int:
    raw = str(cell.get("errors", "radius"))
    if raw == "radius":
        return max_errors_below(radius, N)
    return int(raw)


def _cell_json(cell: dict) -> dict:
    return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in cell.items()}


def _run_decode(cell, settings, seed, index, timings):
    params = _params(cell)
    s = cell.get("s", min(2, params.m))
    opts = DecodeOptions(s=s, eps=cell.get("eps"), beta=cell.get("beta", Fraction(1, 10)), seed=seed, oracle=settings["oracle"])
    radius = decoding_radius(s, params.m, params.R) if opts.eps is None else params.design_distance - opts.eps
    rng = np.random.default_rng(seed)
    planted = cell.get("planted", 1)
    cws = [random_codeword(params, rng) for _ in range(planted)]
    if planted == 1:
        e = _errors(cell, radius, params.N)
        g = corrupt(cws[0], e, child_seed(seed, 2))
    else:
        e = None
        share = [params.N // planted] * planted
        share[0] += params.N - sum(share)
        g = plant_word(cws, share, child_seed(seed, 2))
    rep = decode_end_to_end(params, g, cell.get("algo", "det"), opts, errors=e)
    timings.append((index, "decode", rep.wall_time))
    rec = rep.record()
    return rec, {"agreement": rep.agreement, "list_size": len(rep.output), "field_ops": rep.field_ops, "verified": rep.verified}


def _success_instance(cell, seed):
    params = _params(cell)
    s, k = cell.get("s", 3), cell.get("k", 2)
    radius = decoding_radius(s, params.m, params.R)
    rng = np.random.default_rng(seed)
    planted = cell.get("planted", 1)
    cws = [random_codeword(params, rng) for _ in range(planted)]
    h = cws[0]
    if planted == 1:
        g = corrupt(h, _errors(cell, radius, params.N), child_seed(seed, 2))
    else:
        # each planted codeword barely inside the radius
        need = int(params.N * (1 - radius)) + 1
        g = plant_word(cws, [need] * planted, child_seed(seed, 2))
    H = harness_container(params, cws, k, child_seed(seed, 3))
    return params, s, k, h, g, H, radius


def _run_success(cell, settings, seed, index, timings):
    params, s, k, h, g, H, radius = _success_instance(cell, seed)
    start = time.perf_counter()
    hits = fails = 0
    for t in range(settings["trials"]):
        out = rand_prune_once(g, H, s, child_seed(seed, 4, t))
        if out is FAIL:
            fails += 1
        elif out == h:
            hits += 1
    timings.append((index, "success", time.perf_counter() - start))
    freq = hits / settings["trials"]
    theory = 1 / (s * k + 1)
    rec = {"s": s, "k": k, "radius": str(radius), "trials": settings["trials"], "hits": hits, "fails": fails,
           "frequency": freq, "theory": theory, "profile": dimension_profile(g, H, s).as_dict()}
    return rec, {"frequency": freq, "theory": theory}


def _run_listsize(cell, settings, seed, index, timings):
    params = _params(cell)
    s = cell.get("s", 2)
    radius = decoding_radius(s, params.m, params.R)
    rng = np.random.default_rng(seed)
    planted = cell.get("planted", 1)
    cws = [random_codeword(params, rng) for _ in range(planted)]
    if planted == 1:
        g = corrupt(cws[0], _errors(cell, radius, params.N), child_seed(seed, 2))
    else:
        share = [params.N // planted] * planted
        share[0] += params.N - sum(share)
        g = plant_word(cws, share, child_seed(seed, 2))
    start = time.perf_counter()
    size = len(brute_force_list(params, g, radius)) if radius > 0 else 0
    timings.append((index, "listsize", time.perf_counter() - start))
    return {"s": s, "radius": str(radius), "list_size": size, "violation": size > s}, {"list_size": size, "violation": size > s}


def _run_scaling(cell, settings, seed, index, timings):
    params = _params(cell)
    k = cell.get("k", 1)
    delta = params.design_distance
    eps = cell.get("eps") if "eps" in cell else delta * cell.get("eps_frac", Fraction(1, 2))
    rng = np.random.default_rng(seed)
    h = random_codeword(params, rng)
    g = corrupt(h, max_errors_below(delta - eps, params.N), child_seed(seed, 2))
    H = harness_container(params, [h], k, child_seed(seed, 3))
    start = time.perf_counter()
    with count_field_ops() as ops:
        out, stats = det_prune(g, eps, H, delta, DetPruneConfig(), stats=True)
    timings.append((index, "scaling", time.perf_counter() - start))
    rec = {"N": params.N, "k": k, "eps": str(eps), "list_size": len(out), "field_ops": ops.ops,
           "intersections": stats.intersections, "recursive_calls": stats.calls, "found_planted": h in out}
    return rec, {"field_ops": ops.ops, "N": params.N}


def _run_gk16(cell, settings, seed, index, timings):
    params = _params(cell)
    k = cell.get("k", 2)
    rng = np.random.default_rng(seed)
    cws = [random_codeword(params, rng) for _ in range(2)]
    g = plant_word(cws, [params.N // 2, params.N - params.N // 2], child_seed(seed, 2))
    H = harness_container(params, cws[: min(2, k + 1)], k, child_seed(seed, 3))
    prof = dimension_profile(g, H, k)
    bound = gk16_bound(k, params.m, params.R, params.N)
    ok = prof.dimension_sum() <= bound
    timings.append((index, "gk16", 0.0))
    return {"k": k, "profile": prof.as_dict(), "dimension_sum": prof.dimension_sum(), "bound": str(bound), "holds": ok}, {"holds": ok}


RUNNERS = {"decode": _run_decode, "success": _run_success, "listsize": _run_listsize, "scaling": _run_scaling, "gk16": _run_gk16}


def _aggregate(kind: str, rows: list[dict]) -> dict:
    if not rows:
        return {"runs": 0}
    agg: dict = {"runs": len(rows)}
    for key in rows[0]:
        vals = [r[key] for r in rows if r[key] is not None]
        if not vals:
            continue
        if isinstance(vals[0], bool):
            agg[f"{key}_rate"] = sum(vals) / len(vals)
        elif isinstance(vals[0], (int, float)):
            agg[f"{key}_mean"] = statistics.fmean(vals)
            agg[f"{key}_median"] = statistics.median(vals)
    return agg


def run_experiment_text(text: str, out_path) -> dict:
    """Run the experiment described by ``text``; returns the aggregate rows."""
    settings, grid = parse_config(text)
    kind = settings["kind"]
    runner = RUNNERS[kind]
    out_path = Path(out_path)
    lines = [_dumps({"type": "header", "kind": kind, "master_seed": settings["master_seed"],
                     "settings": {k: v for k, v in settings.items() if k != "kind"},
                     "grid": [[k, [str(v) for v in vals]] for k, vals in grid if k]})]
    timings: list = []
    aggregates = []
    for cell_index, cell in enumerate(grid_cells(grid)):
        rows = []
        for inst in range(settings["instances"]):
            seed = child_seed(settings["master_seed"], cell_index, inst)
            try:
                rec, summary = runner(cell, settings, seed, (cell_index, inst), timings)
            except FrsError as exc:
                rec, summary = {"error": f"{type(exc).__name__}: {exc}"}, None
            lines.append(_dumps({"type": "run", "cell": cell_index, "instance": inst, "config": _cell_json(cell), **rec}))
            if summary is not None:
                rows.append(summary)
        agg = {"cell": cell_index, **_cell_json(cell), **_aggregate(kind, rows)}
        aggregates.append(agg)
    if kind == "scaling" and len(aggregates) > 1:
        for prev, cur in zip(aggregates, aggregates[1:]):
            if prev.get("field_ops_median") and "field_ops_median" in cur:
                cur["field_ops_ratio"] = cur["field_ops_median"] / prev["field_ops_median"]
    for agg in aggregates:
        lines.append(_dumps({"type": "aggregate", **agg}))
    out_path.write_text("\n".join(lines) + "\n")
    _write_csv(aggregate_csv_path(out_path), aggregates)
    _write_timings(timing_csv_path(out_path), timings, kind)
    return {"aggregates": aggregates}


def aggregate_csv_path(out_path) -> Path:
    out_path = Path(out_path)
    return out_path.with_name(out_path.name + ".csv")


def timing_csv_path(out_path) -> Path:
    out_path = Path(out_path)
    return out_path.with_name(out_path.name + ".timing.csv")


def _write_csv(path: Path, rows: list[dict]) -> None:
    fields: list[str] = []
    for r in rows:
        for k in r:
            if k not in fields:
                fields.append(k)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields or ["cell"], lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(r)
    path.write_text(buf.getvalue())


def _write_timings(path: Path, timings: list, kind: str) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["cell", "instance", "kind", "wall_time"])
    by_cell: dict[int, list[float]] = {}
    for (cell, inst), what, wall in timings:
        writer.writerow([cell, inst, what, f"{wall:.6f}"])
        by_cell.setdefault(cell, []).append(wall)
    if kind == "scaling":
        medians = [statistics.median(by_cell[c]) for c in sorted(by_cell)]
        for c, (a, b) in enumerate(zip(medians, medians[1:]), start=1):
            writer.writerow([c, "median_ratio", kind, f"{b / a:.6f}" if a > 0 else "nan"])
    path.write_text(buf.getvalue())


def run_experiment(config_path, out_path) -> dict:
    return run_experiment_text(Path(config_path).read_text(), out_path)


BENCH_SUITES = {
    "scaling": """
[experiment]
kind = scaling
master_seed = 11
instances = 3

[grid]
q = 61
m = 2
N = 2, 4, 8, 16, 30
Rn = 2
k = 2
eps_frac = 1/2
""",
    "success": """
[experiment]
kind = success
master_seed = 12
instances = 5
trials = 2000

[grid]
q = 61
n = 54
m = 9
Rn = 3
s = 3
k = 2
planted = 3
""",
    "listsize": """
[experiment]
kind = listsize
master_seed = 13
instances = 20

[grid]
q = 31
n = 30
m = 3, 5
Rn = 2, 3
s = 1, 2, 3
planted = 1, 2
""",
}


def run_bench(suite: str, out_path) -> dict:
    if suite not in BENCH_SUITES:
        raise ConfigError(f"unknown bench suite {suite!r}; expected one of {sorted(BENCH_SUITES)}")
    return run_experiment_text(BENCH_SUITES[suite], out_path)
