"""Randomized pruning for folded Reed-Solomon containers.

``rand_prune_once`` conditions on one coordinate at a time, drawing the
coordinate's dimension class r with weight |S_r| * (s*r + 1) and then a
coordinate uniformly inside the class; it recurses until a single point
remains. ``krsw_prune`` is the uniform-coordinate baseline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadEpsilon, BadParams
from .frs import FoldedWord, decoding_radius, folded_distance
from .seeds import child_seed
from .subspace import EMPTY, condition, condition_all

FAIL = None


@dataclass(frozen=True)
class DimensionProfile:
    """|S_r| for r = 0..k, weights w_r and their total W."""

    sizes: tuple[int, ...]
    weights: tuple[int, ...]
    total: int

    @property
    def k(self) -> int:
        return len(self.sizes) - 1

    def dimension_sum(self) -> int:
        """sum_r r * |S_r|, i.e. sum over coordinates of dim(H_i) for nonempty H_i."""
        return sum(r * c for r, c in enumerate(self.sizes))

    def as_dict(self) -> dict:
        return {"sizes": list(self.sizes), "weights": list(self.weights), "W": self.total}


def gk16_bound(k: int, m: int, R, N: int) -> Fraction:
    """k * mR / (m - k + 1) * N."""
    return k * (m * Fraction(R)) / (m - k + 1) * N


def _profile(conditioned, k: int, s: int):
    classes: list[list[int]] = [[] for _ in range(k + 1)]
    for i, Hi in enumerate(conditioned):
        if Hi is not EMPTY:
            classes[Hi.dim].append(i)
    sizes = tuple(len(c) for c in classes)
    weights = tuple(0 if r == k else sizes[r] * (s * r + 1) for r in range(k + 1))
    return DimensionProfile(sizes, weights, sum(weights)), classes


def dimension_profile(g: FoldedWord, H, s: int) -> DimensionProfile:
    if H is EMPTY:
        raise BadParams("dimension profile of the empty space is undefined")
    k = H.dim
    if k > s:
        raise BadParams(f"dim(H) = {k} exceeds s = {s}")
    return _profile(condition_all(H, g), k, s)[0]


def _rng(seed_or_rng):
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def _radius(H, s: int) -> Fraction:
    params = H.ambient.params
    if params is None:
        raise BadParams("randomized pruning needs a container that knows its code parameters")
    if not 1 <= s <= params.m:
        raise BadParams(f"need 1 <= s <= m, got s={s}, m={params.m}")
    return decoding_radius(s, params.m, params.R)


def rand_prune_once(g: FoldedWord, H, s: int, rng_seed=0):
    """One run: a list codeword of H, or FAIL (None)."""
    if H is EMPTY:
        return FAIL
    if H.dim > s:
        raise BadParams(f"dim(H) = {H.dim} exceeds s = {s}")
    radius = _radius(H, s)
    rng = _rng(rng_seed)
    while True:
        k = H.dim
        if k == 0:
            h = H.unique_point()
            return h if folded_distance(h, g) < radius else FAIL
        profile, classes = _profile(condition_all(H, g), k, s)
        if profile.total == 0:
            return FAIL
        ticket = int(rng.integers(profile.total))
        for r, w in enumerate(profile.weights):
            if ticket < w:
                break
            ticket -= w
        i = classes[r][int(rng.integers(len(classes[r])))]
        H = condition(H, g, i)


def repeat_count(s: int, beta) -> int:
    """ceil((s(s-1) + 1) * ln(s / beta)), at least 1."""
    beta = Fraction(beta)
    if not 0 < beta < 1:
        raise BadParams(f"need 0 < beta < 1, got {beta}")
    return max(1, math.ceil((s * (s - 1) + 1) * math.log(s / beta)))


def rand_decode(g: FoldedWord, H, s: int, beta, rng_seed: int = 0) -> set[FoldedWord]:
    """Union of repeat_count(s, beta) independent rand_prune_once runs."""
    t = repeat_count(s, beta)
    out = set()
    for trial in range(t):
        h = rand_prune_once(g, H, s, child_seed(rng_seed, 0, trial))
        if h is not FAIL:
            out.add(h)
    return out


def krsw_prune(g: FoldedWord, H, eps, delta, rng_seed=0):
    """Condition on uniform coordinates until a point remains (at most 4k draws)."""
    eps, delta = Fraction(eps), Fraction(delta)
    if not 0 < eps < delta:
        raise BadEpsilon(f"need 0 < eps < delta, got eps={eps}, delta={delta}")
    if H is EMPTY:
        return FAIL
    rng = _rng(rng_seed)
    for _ in range(4 * H.dim):
        if H.dim == 0:
            break
        H = condition(H, g, int(rng.integers(g.N)))
        if H is EMPTY:
            return FAIL
    if H.dim != 0:
        return FAIL
    h = H.unique_point()
    return h if folded_distance(h, g) < delta - eps else FAIL
