"""Deterministic pruning of an affine subspace of a linear code.

Given H of dimension k and a received word g, ``det_prune`` returns every
h in H with folded distance to g below delta - eps. Coordinates are
conditioned one at a time; popular conditioned spaces are pruned
recursively, and the remaining coordinates are paired along a hierarchy of
expanders whose edges carry intersections of their endpoint spaces.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadEpsilon
from .expander import build_expander, edges
from .frs import FoldedWord, folded_distance
from .subspace import EMPTY, EMPTY_KEY, canonical_key, condition_all, intersect


def heavy_hitters(stream, p) -> set:
    """Keys occurring at least p * len(stream) times.

    One Misra-Gries pass with ceil(2/p) counters yields a candidate superset
    (any key above len/(counters+1) survives); a second pass counts the
    candidates exactly.
    """
    p = Fraction(p)
    if not 0 < p <= 1:
        raise ValueError(f"threshold must lie in (0, 1], got {p}")
    stream = list(stream)
    if not stream:
        return set()
    slots = math.ceil(2 / p)
    counters: dict = {}
    for key in stream:
        if key in counters:
            counters[key] += 1
        elif len(counters) < slots:
            counters[key] = 1
        else:
            for other in list(counters):
                counters[other] -= 1
                if counters[other] == 0:
                    del counters[other]
    exact = Counter(key for key in stream if key in counters)
    need = p * len(stream)
    return {key for key, c in exact.items() if c >= need}


@dataclass
class DetPruneConfig:
    popularity_divisor: int = 32
    lambda_divisor: int = 24
    expander_provider: str = "gabber-galil"
    expander_seed: int = 0


@dataclass
class DetPruneStats:
    calls: int = 0
    intersections: int = 0
    expander_edges: int = 0
    max_depth: int = 0
    thresholds: dict = field(default_factory=dict)


def thresholds(eps, k: int, divisor: int = 32) -> list[Fraction]:
    """[p_0, ..., p_{k-1}] with p_{k-1} = eps and p_r = p_{r+1}^2 / divisor."""
    if k <= 0:
        return []
    out = [Fraction(eps)]
    for _ in range(k - 1):
        out.append(out[-1] ** 2 / divisor)
    return out[::-1]


class _DetPruner:
    def __init__(self, g: FoldedWord, radius: Fraction, eps: Fraction, config: DetPruneConfig):
        self.g = g
        self.radius = radius
        self.eps = eps
        self.config = config
        self.found: dict[bytes, FoldedWord] = {}
        self.visited: set[bytes] = set()
        self.stats = DetPruneStats()

    def run(self, H, depth: int = 0) -> None:
        if H is EMPTY:
            return
        key = canonical_key(H)
        if key in self.visited:
            return
        self.visited.add(key)
        self.stats.calls += 1
        self.stats.max_depth = max(self.stats.max_depth, depth)
        k = H.dim
        if k == 0:
            h = H.unique_point()
            if folded_distance(h, self.g) < self.radius:
                self.found[h.key()] = h
            return
        ps = thresholds(self.eps, k, self.config.popularity_divisor)
        self.stats.thresholds.setdefault(k, ps)
        conditioned = condition_all(H, self.g)
        level = [Hi for Hi in conditioned if Hi is EMPTY or Hi.dim <= k - 1]
        self._recurse_popular(level, ps[k - 1], depth)
        for r in range(k - 2, -1, -1):
            if not level:
                break
            lam = ps[r + 1] / self.config.lambda_divisor
            G = build_expander(len(level), lam, self.config.expander_provider, self.config.expander_seed)
            nxt = []
            for u, v, dummy in edges(G):
                self.stats.expander_edges += 1
                if dummy:
                    nxt.append(EMPTY)
                    continue
                Huv = intersect(level[u], level[v])
                self.stats.intersections += 1
                if Huv is EMPTY or Huv.dim <= r:
                    nxt.append(Huv)
            level = nxt
            self._recurse_popular(level, ps[r], depth)

    def _recurse_popular(self, level, p: Fraction, depth: int) -> None:
        if not level:
            return
        by_key = {}
        keys = []
        for Hv in level:
            key = canonical_key(Hv)
            keys.append(key)
            by_key.setdefault(key, Hv)
        for key in sorted(heavy_hitters(keys, p / 2)):
            if key != EMPTY_KEY:
                self.run(by_key[key], depth + 1)


def det_prune(g: FoldedWord, eps, H, delta, config: DetPruneConfig | None = None, stats: bool = False):
    """All h in H with folded distance to g below delta - eps.

    ``delta`` must lower-bound the distance of the code containing H. With
    ``stats=True`` returns (set, DetPruneStats).
    """
    eps, delta = Fraction(eps), Fraction(delta)
    if not 0 < eps < delta:
        raise BadEpsilon(f"need 0 < eps < delta, got eps={eps}, delta={delta}")
    pruner = _DetPruner(g, delta - eps, eps, config or DetPruneConfig())
    pruner.run(H)
    out = set(pruner.found.values())
    return (out, pruner.stats) if stats else out
