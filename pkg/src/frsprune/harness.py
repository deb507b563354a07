"""Brute-force oracles, instance generators and end-to-end decoding."""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .detprune import DetPruneConfig, det_prune
from .errors import BadParams, BudgetExceeded
from .frs import FoldedWord, FrsParams, decoding_radius, encode_many, folded_distance, is_codeword
from .interp import find_container
from .linalg import count_field_ops
from .randprune import FAIL, dimension_profile, krsw_prune, rand_decode, repeat_count
from .seeds import child_seed
from .subspace import EMPTY, enumerate_points, enumeration_budget

ALGOS = ("det", "rand", "krsw", "brute")


def brute_force_list(params: FrsParams, g: FoldedWord, radius, budget: int | None = None) -> set[FoldedWord]:
    """Every codeword at folded distance strictly below ``radius`` from g."""
    radius = Fraction(radius)
    budget = enumeration_budget() if budget is None else budget
    q, Rn, N = params.q, params.Rn, params.N
    total = q**Rn
    if total > budget:
        raise BudgetExceeded(f"{q}^{Rn} messages exceed the oracle budget {budget}")
    # distance < radius  <=>  agreements > N * (1 - radius)
    min_agree = math.floor(N * (1 - radius)) + 1
    if min_agree > N:
        return set()
    place = q ** np.arange(Rn, dtype=np.int64)
    out = set()
    chunk = 1 << 15
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        msgs = (idx[:, None] // place) % q
        words = encode_many(params, msgs)
        agree = np.all(words == g.symbols[None], axis=2).sum(axis=1)
        for w in words[agree >= min_agree]:
            out.add(FoldedWord(w, q))
    return out


def container_list(H, g: FoldedWord, radius) -> set[FoldedWord]:
    """Enumeration oracle: points of H strictly within ``radius`` of g."""
    radius = Fraction(radius)
    return {h for h in enumerate_points(H) if folded_distance(h, g) < radius}


def random_codeword(params: FrsParams, rng) -> FoldedWord:
    msg = rng.integers(0, params.q, size=(1, params.Rn))
    return FoldedWord(encode_many(params, msg)[0], params.q)


def max_errors_below(radius, N: int) -> int:
    """Largest e with e/N strictly below radius (0 if none)."""
    radius = Fraction(radius)
    e = math.ceil(radius * N) - 1
    return max(0, min(e, N))


def plant_word(codewords, agreements, rng_seed: int) -> FoldedWord:
    """Received word agreeing with codewords[j] on agreements[j] disjoint positions,
    uniformly random (and different from every planted codeword) elsewhere."""
    codewords = list(codewords)
    N, m = codewords[0].symbols.shape
    q = codewords[0].q
    if sum(agreements) > N:
        raise BadParams("planted agreements exceed the block length")
    rng = np.random.default_rng(rng_seed)
    order = rng.permutation(N).tolist()
    out = np.zeros((N, m), dtype=np.int64)
    pos = 0
    for cw, a in zip(codewords, agreements):
        for i in order[pos : pos + a]:
            out[i] = cw.symbols[i]
        pos += a
    for i in order[pos:]:
        while True:
            col = rng.integers(0, q, size=m)
            if not any(np.array_equal(col, cw.symbols[i]) for cw in codewords):
                break
        out[i] = col
    return FoldedWord(out, q)


def word_text(w: FoldedWord) -> str:
    return ";".join(",".join(str(int(x)) for x in col) for col in w.symbols)


@dataclass
class DecodeOptions:
    s: int | None = None
    eps: Fraction | None = None
    beta: Fraction = Fraction(1, 10)
    seed: int = 0
    oracle: bool = False
    container: object | None = None
    krsw_trials: int | None = None
    det_config: DetPruneConfig | None = None


@dataclass
class DecodeReport:
    params: dict
    algo: str
    s: int
    eps: str | None
    beta: str | None
    radius: str
    seed: int
    errors: int | None = None
    container_dim: int | None = None
    output: list[str] = field(default_factory=list)
    oracle: list[str] | None = None
    agreement: bool | None = None
    verified: bool = True
    trials: int = 0
    success_frequency: float | None = None
    field_ops: int = 0
    wall_time: float = 0.0
    profile: dict | None = None

    def record(self, timing: bool = False) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("wall_time")
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.record(timing), sort_keys=True, separators=(",", ":"))


def default_s(params: FrsParams) -> int:
    return min(2, params.m)


def decode_end_to_end(params: FrsParams, g: FoldedWord, algo: str, options: DecodeOptions | None = None, errors=None) -> DecodeReport:
    """Container (interpolated, or supplied for isolation) followed by the chosen pruner."""
    opts = options or DecodeOptions()
    if algo not in ALGOS:
        raise BadParams(f"unknown algorithm {algo!r}; expected one of {ALGOS}")
    s = opts.s if opts.s is not None else default_s(params)
    radius_s = decoding_radius(s, params.m, params.R)
    delta = params.design_distance
    if opts.eps is not None:
        eps = Fraction(opts.eps)
        radius = delta - eps
        if radius > radius_s:
            raise BadParams(f"radius {radius} exceeds what an s={s} container covers ({radius_s})")
    else:
        radius = radius_s
        eps = delta - radius
    if algo in ("det", "krsw") and not 0 < eps < delta:
        raise BadParams(f"decoding radius {radius} must be positive for {algo}")
    report = DecodeReport(
        params={"q": params.q, "n": params.n, "m": params.m, "N": params.N, "Rn": params.Rn, "gamma": params.gamma},
        algo=algo,
        s=s,
        eps=str(eps) if algo in ("det", "krsw") else None,
        beta=str(Fraction(opts.beta)) if algo in ("rand", "krsw") else None,
        radius=str(radius),
        seed=opts.seed,
        errors=errors,
    )
    start = time.perf_counter()
    with count_field_ops() as ops:
        if algo == "brute":
            found = brute_force_list(params, g, radius)
        else:
            H = opts.container if opts.container is not None else find_container(params, g, s)
            report.container_dim = None if H is EMPTY else H.dim
            if H is EMPTY:
                found = set()
            elif algo == "det":
                found = det_prune(g, eps, H, delta, opts.det_config)
            elif algo == "rand":
                report.profile = dimension_profile(g, H, s).as_dict() if H.dim <= s else None
                found = rand_decode(g, H, s, opts.beta, opts.seed)
                report.trials = repeat_count(s, opts.beta)
            else:
                trials = opts.krsw_trials
                if trials is None:
                    trials = min(10_000, math.ceil(math.log(1 / float(opts.beta)) / float(eps) ** max(H.dim, 1)))
                found = set()
                hits = 0
                for t in range(trials):
                    h = krsw_prune(g, H, eps, delta, child_seed(opts.seed, 1, t))
                    if h is not FAIL:
                        hits += 1
                        found.add(h)
                report.trials = trials
                report.success_frequency = hits / trials
    report.wall_time = time.perf_counter() - start
    report.field_ops = ops.ops
    report.output = sorted(word_text(h) for h in found)
    report.verified = all(is_codeword(params, h) and folded_distance(h, g) < radius for h in found)
    if opts.oracle:
        oracle = brute_force_list(params, g, radius)
        report.oracle = sorted(word_text(h) for h in oracle)
        report.agreement = set(report.oracle) == set(report.output)
    return report
