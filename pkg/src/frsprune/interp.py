"""Containers: low-dimensional affine subspaces of the code holding the list.

``find_container`` is the linear-algebraic interpolation decoder: it finds a
nonzero Q(X, Y_1..Y_s) = A_0(X) + sum_l A_l(X) Y_l vanishing on every length-s
window of every received symbol, then solves A_0 + sum_l A_l(X) f(gamma^(l-1) X) = 0
for the message f. ``harness_container`` builds a container directly from a
known set of codewords so that pruners can be tested in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadParams, DegenerateSystem, DimensionTooSmall, ParamsInfeasible
from .frs import FoldedWord, FrsParams, decoding_radius, encode_many, message_of
from .linalg import nullspace, rank, reduce_system, solve_affine
from .subspace import EMPTY, from_basis, span_dimension


@dataclass(frozen=True)
class InterpConfig:
    s: int
    D: int

    @classmethod
    def for_params(cls, params: FrsParams, s: int) -> InterpConfig:
        if not 1 <= s <= params.m:
            raise BadParams(f"need 1 <= s <= m, got s={s}, m={params.m}")
        constraints = params.N * (params.m - s + 1)
        D = -(-(constraints - params.Rn - s + 1) // (s + 1))
        return cls(s, max(D, 0))

    def unknowns(self, params: FrsParams) -> int:
        return self.s * (self.D + 1) + self.D + params.Rn

    def constraints(self, params: FrsParams) -> int:
        return params.N * (params.m - self.s + 1)


def interpolation_matrix(params: FrsParams, g: FoldedWord, cfg: InterpConfig) -> np.ndarray:
    """One row per window (symbol i, offset j); columns A_0 coeffs then A_1..A_s coeffs."""
    q, s, D, Rn = params.q, cfg.s, cfg.D, params.Rn
    rows = []
    for i in range(params.N):
        for j in range(params.m - s + 1):
            x = int(params.points[i, j])
            xp = [pow(x, t, q) for t in range(D + Rn)]
            row = list(xp)
            for ell in range(s):
                y = int(g.symbols[i, j + ell])
                row.extend(y * xp[t] % q for t in range(D + 1))
            rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), cfg.unknowns(params))


def _split(vec, cfg: InterpConfig, Rn: int):
    D = cfg.D
    a0 = [int(x) for x in vec[: D + Rn]]
    rest = vec[D + Rn :]
    al = [[int(x) for x in rest[t * (D + 1) : (t + 1) * (D + 1)]] for t in range(cfg.s)]
    return a0, al


def _strip_x_power(a0, al):
    polys = [a0] + al
    low = min((next(t for t, c in enumerate(p) if c) for p in polys if any(p)), default=0)
    if low == 0:
        return a0, al
    return a0[low:] + [0] * low, [p[low:] + [0] * low for p in al]


def message_system(params: FrsParams, a0, al):
    """Rows (in the Rn message coefficients) of A_0(X) + sum_l A_l(X) f(gamma^(l-1) X) = 0."""
    q, Rn, gamma = params.q, params.Rn, params.gamma
    s = len(al)
    # twist[l][t] = gamma^((l) * t) for the l-th shifted copy of f
    twist = [[pow(gamma, ell * t, q) for t in range(Rn)] for ell in range(s)]
    deg = len(a0)
    rows = []
    for e in range(deg):
        coeffs = []
        for t in range(Rn):
            c = 0
            d = e - t
            if 0 <= d:
                for ell in range(s):
                    if d < len(al[ell]) and al[ell][d]:
                        c += al[ell][d] * twist[ell][t]
            coeffs.append(c % q)
        rows.append(tuple(coeffs) + (-a0[e] % q,))
    return rows


def find_container(params: FrsParams, g: FoldedWord, s: int):
    """Affine subspace of dimension <= s-1 containing every codeword within the
    radius s/(s+1) * (1 - mR/(m-s+1)) of ``g``; EMPTY when no message fits."""
    cfg = InterpConfig.for_params(params, s)
    radius = decoding_radius(s, params.m, params.R)
    lhs = (1 - radius) * cfg.constraints(params)
    if not lhs > cfg.D + params.Rn - 1:
        raise ParamsInfeasible(f"vanishing bound fails: {lhs} <= D + Rn - 1 = {cfg.D + params.Rn - 1}")
    M = interpolation_matrix(params, g, cfg)
    ker = nullspace(M, params.q)
    if len(ker) == 0:
        raise DegenerateSystem("interpolation system has only the zero solution")
    a0, al = _strip_x_power(*_split(ker[0], cfg, params.Rn))
    red = reduce_system(message_system(params, a0, al), params.Rn, params.q)
    if red is None:
        return EMPTY
    particular, directions = solve_affine(red, params.Rn, params.q)
    if len(directions) > s - 1:
        raise DegenerateSystem(f"solution space has dimension {len(directions)} > s - 1 = {s - 1}")
    words = encode_many(params, [particular, *directions])
    base = FoldedWord(words[0], params.q)
    return from_basis(base, [FoldedWord(w, params.q) for w in words[1:]], params)


def harness_container(params: FrsParams, words, k: int, rng_seed: int):
    """A k-dimensional affine subspace of the code containing ``words``, padded
    with random independent codeword directions."""
    words = list(words)
    q, Rn = params.q, params.Rn
    span = span_dimension(words, q)
    if k < span:
        raise DimensionTooSmall(f"affine span of the list has dimension {span} > k = {k}")
    if k > Rn:
        raise BadParams(f"k = {k} exceeds the code dimension Rn = {Rn}")
    msgs = []
    for w in words:
        c = message_of(params, w)
        if c is None:
            raise BadParams("list contains a word that is not a codeword")
        msgs.append(np.array(c, dtype=np.int64))
    rng = np.random.default_rng(rng_seed)
    base = msgs[0] if msgs else rng.integers(0, q, size=Rn)
    dirs: list[np.ndarray] = []
    for c in msgs[1:]:
        cand = (c - base) % q
        if rank(np.array(dirs + [cand]), q) > len(dirs):
            dirs.append(cand)
    while len(dirs) < k:
        cand = rng.integers(0, q, size=Rn)
        if rank(np.array(dirs + [cand]), q) > len(dirs):
            dirs.append(cand)
    enc = encode_many(params, np.array([base] + dirs, dtype=np.int64).reshape(-1, Rn))
    return from_basis(FoldedWord(enc[0], q), [FoldedWord(e, q) for e in enc[1:]], params)


def container_radius(params: FrsParams, s: int) -> Fraction:
    return decoding_radius(s, params.m, params.R)
