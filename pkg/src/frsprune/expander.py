"""Regular expanders on indexed vertex sets.

The base graph is the 8-regular Gabber-Galil graph on Z_s x Z_s. Powers of it
give smaller spectral bounds at degree 8^t. When the degree needed to reach a
target bound is at least the number of vertices, the complete digraph (all
ordered pairs of distinct vertices) is used instead.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded

GG_DEGREE = 8
GG_LAMBDA = 5 * math.sqrt(2) / 8
CERT_BUDGET = 4096


@dataclass(frozen=True)
class ExpanderGraph:
    """A d-regular multigraph on n_prime >= n_vertices vertices.

    Vertices ``n_vertices .. n_prime - 1`` are padding; ``neighbors`` is an
    (n_prime, d) table, or None for the complete digraph.
    """

    n_vertices: int
    n_prime: int
    degree: int
    lam_target: float
    kind: str
    power: int = 0
    neighbors: np.ndarray | None = None
    lam_measured: float | None = None

    @property
    def is_complete(self) -> bool:
        return self.neighbors is None

    @property
    def num_edges(self) -> int:
        return self.n_prime * self.degree

    def edges(self) -> Iterator[tuple[int, int, bool]]:
        yield from edges(self)


def gabber_galil(side: int) -> np.ndarray:
    """Neighbor table of the Gabber-Galil graph on Z_side x Z_side; vertex (x, y) is x*side + y."""
    s = side
    x, y = np.divmod(np.arange(s * s), s)
    cols = [
        ((x + 2 * y) % s, y),
        ((x - 2 * y) % s, y),
        ((x + 2 * y + 1) % s, y),
        ((x - 2 * y - 1) % s, y),
        (x, (y + 2 * x) % s),
        (x, (y - 2 * x) % s),
        (x, (y + 2 * x + 1) % s),
        (x, (y - 2 * x - 1) % s),
    ]
    return np.stack([a * s + b for a, b in cols], axis=1).astype(np.int64)


def graph_power(neighbors: np.ndarray, t: int) -> np.ndarray:
    """Neighbor table whose edges are all length-t walks (in lexicographic step order)."""
    out = np.arange(neighbors.shape[0], dtype=np.int64)[:, None]
    for _ in range(t):
        out = neighbors[out].reshape(neighbors.shape[0], -1)
    return out


def random_regular(n: int, degree: int, seed: int) -> np.ndarray:
    """Union of degree/2 random permutations and their inverses (symmetric, degree-regular)."""
    rng = np.random.default_rng(seed)
    cols = []
    for _ in range(degree // 2):
        perm = rng.permutation(n)
        cols.append(perm)
        cols.append(np.argsort(perm))
    return np.stack(cols, axis=1).astype(np.int64)


def complete_graph(n: int) -> ExpanderGraph:
    lam = 1.0 / (n - 1) if n > 1 else 0.0
    return ExpanderGraph(n, n, max(n - 1, 0), lam, "complete", lam_measured=lam)


def from_neighbors(neighbors, n_vertices: int | None = None, kind: str = "custom") -> ExpanderGraph:
    table = np.asarray(neighbors, dtype=np.int64)
    n = table.shape[0]
    return ExpanderGraph(n if n_vertices is None else n_vertices, n, table.shape[1], 1.0, kind, neighbors=table)


def _matvec(G: ExpanderGraph, x: np.ndarray) -> np.ndarray:
    if G.neighbors is None:
        return (x.sum() - x) / (G.n_prime - 1)
    return x[G.neighbors].mean(axis=1)


def second_eigenvalue(G: ExpanderGraph, budget: int = CERT_BUDGET, tol: float = 1e-6, seed: int = 0) -> float:
    """Largest |eigenvalue| of the normalized adjacency on the complement of the constants.

    Power iteration with the all-ones direction projected out after every
    step; the iterate norm ratio converges to |lambda_2| from below.
    """
    n = G.n_prime
    if n > budget:
        raise BudgetExceeded(f"{n} vertices exceed the certification budget {budget}")
    if n <= 1:
        return 0.0
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n)
    x -= x.mean()
    x /= np.linalg.norm(x)
    est = 0.0
    stable = 0
    for _ in range(100_000):
        y = _matvec(G, x)
        y -= y.mean()
        nrm = float(np.linalg.norm(y))
        if nrm == 0.0:
            return 0.0
        if abs(nrm - est) < tol * 1e-4:
            stable += 1
            if stable >= 20:
                return nrm
        else:
            stable = 0
        est = nrm
        x = y / nrm
    return est


def required_power(lam_target: float, lam_base: float = GG_LAMBDA) -> int:
    return max(1, math.ceil(math.log(lam_target) / math.log(lam_base) - 1e-12))


def build_expander(
    vertices,
    lam_target: float,
    provider: str = "gabber-galil",
    seed: int = 0,
    budget: int = CERT_BUDGET,
) -> ExpanderGraph:
    """An expander on ``vertices`` (a count or a sequence) with second eigenvalue <= lam_target.

    Falls back to the complete digraph whenever the degree the provider
    needs is at least the vertex count.
    """
    nv = vertices if isinstance(vertices, int) else len(vertices)
    lam_target = float(lam_target)
    if not 0 < lam_target < 1:
        raise ValueError(f"lam_target must lie in (0, 1), got {lam_target}")
    if nv <= 1:
        return complete_graph(nv)
    if provider == "gabber-galil":
        side = math.isqrt(nv - 1) + 1
        n_prime = side * side
        t = required_power(lam_target)
        while GG_DEGREE**t < nv:
            if n_prime > budget:
                raise BudgetExceeded(f"{n_prime} vertices exceed the certification budget {budget}")
            G = ExpanderGraph(nv, n_prime, GG_DEGREE**t, lam_target, "gabber-galil", t, graph_power(gabber_galil(side), t))
            lam = second_eigenvalue(G, budget)
            if lam <= lam_target:
                return ExpanderGraph(nv, n_prime, G.degree, lam_target, G.kind, t, G.neighbors, lam)
            t += 1
        return complete_graph(nv)
    if provider == "random":
        degree = math.ceil(16 / lam_target**2)
        degree += degree % 2
        for attempt in range(8):
            if degree >= nv:
                break
            G = ExpanderGraph(nv, nv, degree, lam_target, "random", 0, random_regular(nv, degree, seed + attempt))
            lam = second_eigenvalue(G, budget)
            if lam <= lam_target:
                return ExpanderGraph(nv, nv, degree, lam_target, "random", 0, G.neighbors, lam)
        return complete_graph(nv)
    raise ValueError(f"unknown expander provider {provider!r}")


def edges(G: ExpanderGraph) -> Iterator[tuple[int, int, bool]]:
    """All directed edges (u, v, touches_padding) in a fixed order."""
    n = G.n_prime
    if G.neighbors is None:
        for u in range(n):
            for v in range(n):
                if u != v:
                    yield u, v, False
        return
    nv = G.n_vertices
    for u in range(n):
        for v in G.neighbors[u].tolist():
            yield u, v, (u >= nv or v >= nv)
